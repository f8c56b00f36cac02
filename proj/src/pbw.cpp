#include "colorlie/pbw.hpp"

namespace colorlie {

std::string word_to_string(const Word& w, const std::string& letter) {
  if (w.empty()) return "1";
  std::string out;
  for (int g : w) out += letter + std::to_string(g + 1);
  return out;
}

}  // namespace colorlie
