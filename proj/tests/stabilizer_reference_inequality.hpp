#pragma once

#include "ptmnc/program.hpp"

namespace ptmnc::testing {

// Reference noncontextuality inequality for the stabilizer-qubit scenario:
// an optimal Farkas-dual vertex of its feasibility program, scaled to
// integer coefficients. Classical bound -6 (constant 6); the quantum table
// evaluates to exactly -12.
inline NcInequality stabilizer_reference_inequality() {
  struct Entry {
    const char *k, *s, *t;
    long gamma;
  };
  static const Entry entries[] = {
      {"+", "+", "Z", 3},      {"+", "-i", "Sinv", 3}, {"+", "0", "I", -2},
      {"+", "0", "Z", -2},     {"+", "1", "Sinv", -3}, {"+i", "+", "I", -2},
      {"+i", "+i", "S", -2},   {"+i", "-", "Z", 2},    {"+i", "-i", "Sinv", 2},
      {"+i", "-i", "Z", -5},   {"+i", "0", "S", 3},    {"+i", "1", "Z", 3},
      {"-", "-", "I", -3},     {"-", "-i", "S", 3},    {"-", "0", "S", -2},
      {"-", "0", "Sinv", 1},   {"-i", "+", "S", 1},    {"-i", "+i", "I", 1},
      {"-i", "-", "Sinv", 5},  {"-i", "0", "Sinv", -3},{"-i", "1", "I", -3},
      {"0", "+", "Z", 1},      {"0", "+i", "I", 1},    {"0", "-i", "Z", -1},
      {"0", "1", "I", -1},     {"0", "1", "Sinv", 1},  {"0", "1", "Z", -1},
      {"1", "+i", "Sinv", 1},  {"1", "-", "Z", -1},    {"1", "-i", "S", -1},
      {"1", "0", "S", 1},
  };
  NcInequality ineq;
  for (const Entry& e : entries) {
    ineq.coeffs[{e.k, e.s, e.t}] = Rational(e.gamma);
  }
  ineq.constant = 6;
  return ineq;
}

}  // namespace ptmnc::testing
