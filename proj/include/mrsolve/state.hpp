#pragma once

#include <string>
#include <string_view>

namespace mrsolve {

// Radial quantum numbers: n is the radial node count, l the orbital
// angular momentum. Spectroscopic labels map as N = n + l + 1 ("2p" -> n=0,l=1).
struct QuantumState {
  int n = 0;
  int l = 0;
};

// Throws std::invalid_argument on negative quantum numbers.
void validate(const QuantumState& s);

// Parses labels like "1s", "2p", "6g", "10d". Throws std::invalid_argument.
QuantumState state_from_label(std::string_view label);

std::string to_label(const QuantumState& s);

}  // namespace mrsolve
