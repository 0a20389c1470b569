#include "hc/tables.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hc {

CayleyTable cyclic_table(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return CayleyTable::from_mul("Z" + std::to_string(n), std::move(mul));
}

CayleyTable dihedral_table(int order) {
  if (order % 2 || order < 2) fail(Err::BadParameters, "dihedral order must be even");
  int n = order / 2;
  // element i < n: r^i ; element n+i: r^i s ; s r^i s = r^-i
  auto code = [n](int rot, int flip) { return flip ? n + rot : rot; };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      int ri = i % n, fi = i / n, rj = j % n, fj = j / n;
      // (r^ri s^fi)(r^rj s^fj)
      int rot = fi ? (ri - rj % n + 2 * n) % n : (ri + rj) % n;
      mul[i][j] = code(rot, fi ^ fj);
    }
  return CayleyTable::from_mul("D" + std::to_string(order), std::move(mul));
}

CayleyTable direct_product_table(const CayleyTable& a, const CayleyTable& b) {
  int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> mul(na * nb, std::vector<int>(na * nb));
  auto code = [nb](int x, int y) { return x * nb + y; };
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          mul[code(x1, y1)][code(x2, y2)] = code(a.mul[x1][x2], b.mul[y1][y2]);
  return CayleyTable::from_mul(a.name + "x" + b.name, std::move(mul));
}

CayleyTable quaternion_table() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> mul(8, std::vector<int>(8, -1));
  auto set = [&](int a, int b, int c) {
    mul[a][b] = c;
    mul[neg(a)][b] = neg(c);
    mul[a][neg(b)] = neg(c);
    mul[neg(a)][neg(b)] = c;
  };
  // base relations on {1,i,j,k}
  set(0, 0, 0);
  set(0, 2, 2);
  set(0, 4, 4);
  set(0, 6, 6);
  set(2, 0, 2);
  set(4, 0, 4);
  set(6, 0, 6);
  set(2, 2, 1);  // i*i = -1
  set(4, 4, 1);
  set(6, 6, 1);
  set(2, 4, 6);  // ij = k
  set(4, 6, 2);  // jk = i
  set(6, 2, 4);  // ki = j
  set(4, 2, 7);  // ji = -k
  set(6, 4, 3);  // kj = -i
  set(2, 6, 5);  // ik = -j
  return CayleyTable::from_mul("Q8", std::move(mul));
}

namespace {

std::vector<std::array<int, 4>> perms_of_4(bool even_only) {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> out;
  std::sort(p.begin(), p.end());
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (p[i] > p[j]) ++inv;
    if (!even_only || inv % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // identity first
  std::swap(out[0], *std::find(out.begin(), out.end(), std::array<int, 4>{0, 1, 2, 3}));
  return out;
}

CayleyTable perm_table(const std::string& name, const std::vector<std::array<int, 4>>& elems,
                       int degree) {
  int n = static_cast<int>(elems.size());
  std::map<std::array<int, 4>, int> idx;
  for (int i = 0; i < n; ++i) idx[elems[i]] = i;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 4> c{0, 1, 2, 3};
      for (int x = 0; x < degree; ++x) c[x] = elems[i][elems[j][x]];
      mul[i][j] = idx.at(c);
    }
  return CayleyTable::from_mul(name, std::move(mul));
}

}  // namespace

CayleyTable alternating4_table() { return perm_table("A4", perms_of_4(true), 4); }

CayleyTable symmetric_table(int n) {
  if (n == 3) {
    // as permutations of {0,1,2} embedded in degree 4
    auto all = perms_of_4(false);
    std::vector<std::array<int, 4>> s3;
    for (auto& p : all)
      if (p[3] == 3) s3.push_back(p);
    std::swap(s3[0], *std::find(s3.begin(), s3.end(), std::array<int, 4>{0, 1, 2, 3}));
    return perm_table("S3", s3, 3);
  }
  if (n == 4) return perm_table("S4", perms_of_4(false), 4);
  fail(Err::BadParameters, "symmetric_table supports n = 3, 4");
}

CayleyTable named_table(const std::string& name) {
  if (name == "Q8") return quaternion_table();
  if (name == "A4") return alternating4_table();
  if (name == "S3") return symmetric_table(3);
  if (name == "S4") return symmetric_table(4);
  if (name == "Z2xZ2") return direct_product_table(cyclic_table(2), cyclic_table(2));
  if (name == "Z4xZ2") return direct_product_table(cyclic_table(4), cyclic_table(2));
  if (name == "Z4xZ4") return direct_product_table(cyclic_table(4), cyclic_table(4));
  if (name == "Z3xZ3") return direct_product_table(cyclic_table(3), cyclic_table(3));
  if (name == "Z2^3")
    return direct_product_table(direct_product_table(cyclic_table(2), cyclic_table(2)),
                                cyclic_table(2));
  if (name == "Z2^4")
    return direct_product_table(
        direct_product_table(direct_product_table(cyclic_table(2), cyclic_table(2)),
                             cyclic_table(2)),
        cyclic_table(2));
  if (name == "Z6xZ2") return direct_product_table(cyclic_table(6), cyclic_table(2));
  if (name.size() > 1 && name[0] == 'Z') return cyclic_table(std::stoi(name.substr(1)));
  if (name.size() > 1 && name[0] == 'D') return dihedral_table(std::stoi(name.substr(1)));
  fail(Err::BadParameters, "unknown table name '" + name + "'");
}

std::vector<std::string> small_group_corpus() {
  std::vector<std::string> names;
  for (int n = 3; n <= 16; ++n) names.push_back("Z" + std::to_string(n));
  for (int n = 6; n <= 16; n += 2) names.push_back("D" + std::to_string(n));
  names.insert(names.end(), {"Q8", "A4", "Z2xZ2", "Z4xZ2", "Z4xZ4", "Z3xZ3", "Z2^3", "Z2^4",
                             "Z6xZ2"});
  return names;
}

}  // namespace hc
