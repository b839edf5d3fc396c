#include "mrsolve/state.hpp"

#include <cctype>
#include <stdexcept>

namespace mrsolve {

namespace {
// Spectroscopic letters for l = 0..7 (j is skipped by convention).
constexpr char kLetters[] = {'s', 'p', 'd', 'f', 'g', 'h', 'i', 'k'};
constexpr int kNumLetters = 8;

int letter_to_l(char c) {
  for (int l = 0; l < kNumLetters; ++l)
    if (kLetters[l] == c) return l;
  return -1;
}
}  // namespace

void validate(const QuantumState& s) {
  if (s.n < 0 || s.l < 0)
    throw std::invalid_argument("QuantumState: n and l must be non-negative");
}

QuantumState state_from_label(std::string_view label) {
  if (label.size() < 2)
    throw std::invalid_argument("state label too short: '" + std::string(label) + "'");
  std::size_t i = 0;
  int N = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
    N = N * 10 + (label[i] - '0');
    ++i;
  }
  if (i == 0 || i + 1 != label.size())
    throw std::invalid_argument("bad state label: '" + std::string(label) + "'");
  const int l = letter_to_l(static_cast<char>(
      std::tolower(static_cast<unsigned char>(label[i]))));
  if (l < 0)
    throw std::invalid_argument("unknown orbital letter in '" + std::string(label) + "'");
  if (N <= l)
    throw std::invalid_argument("state label '" + std::string(label) +
                                "' requires principal number > l");
  return QuantumState{N - l - 1, l};
}

std::string to_label(const QuantumState& s) {
  validate(s);
  if (s.l >= kNumLetters)
    throw std::invalid_argument("to_label: l too large for spectroscopic letters");
  return std::to_string(s.n + s.l + 1) + kLetters[s.l];
}

}  // namespace mrsolve
