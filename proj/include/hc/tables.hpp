#pragma once

#include <string>
#include <vector>

#include "hc/group.hpp"

namespace hc {

CayleyTable cyclic_table(int n);
CayleyTable dihedral_table(int order);  // order = 2n, elements r^i and r^i s
CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b);
CayleyTable quaternion_table();       // Q8
CayleyTable alternating4_table();     // A4
CayleyTable symmetric_table(int n);   // S_n for n <= 4

// named lookup: Z<n>, D<order>, Q8, A4, S3, S4, Z2xZ2, Z4xZ2, Z3xZ3, Z2^3, Z2^4
CayleyTable named_table(const std::string& name);

// all names of the bundled order 3..16 corpus
std::vector<std::string> small_group_corpus();

}  // namespace hc
