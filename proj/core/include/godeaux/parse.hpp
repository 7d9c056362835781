#pragma once

#include <string>
#include <vector>

#include "godeaux/poly.hpp"

namespace godeaux::algebra {

// Text grammar shared by fixtures, cache files and CLI I/O:
//   names [A-Za-z][A-Za-z0-9_]*, integer and rational literals a/b,
//   operators + - * ^, parentheses, whitespace insignificant,
//   ^ binds tighter than * binds tighter than +/-.
// parse(print(f)) == f.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// comma-separated list inside [...]
std::vector<Polynomial> parse_list(const RingPtr& ring, const std::string& text);

// list of lists: [[a,b],[c,d]]
std::vector<std::vector<Polynomial>> parse_matrix(const RingPtr& ring, const std::string& text);

std::string print_list(const std::vector<Polynomial>& polys);

}  // namespace godeaux::algebra
