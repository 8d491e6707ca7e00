#pragma once

#include <grpcohom/bicomplex.hpp>
#include <grpcohom/json_io.hpp>

#include <fstream>
#include <memory>
#include <string>

namespace testing_util {

using namespace grpcohom;

inline GroupPtr cyclic(int n) { return std::make_shared<const FiniteGroup>(make_cyclic(n)); }
inline GroupPtr klein() {
  return std::make_shared<const FiniteGroup>(direct_product(make_cyclic(2), make_cyclic(2)));
}

inline ModulePtr trivial_module(const GroupPtr& g, int rank, std::vector<std::int64_t> torsion = {}) {
  return std::make_shared<const GModule>(GModule::trivial(g, rank, std::move(torsion)));
}

// Cyclic group whose generator multiplies every coordinate by `generator`.
inline ModulePtr cyclic_module(const GroupPtr& g, int rank, std::vector<std::int64_t> torsion, long generator) {
  const std::size_t dim = static_cast<std::size_t>(rank) + torsion.size();
  std::vector<linalg::IntMatrix> action;
  linalg::IntMatrix power = linalg::IntMatrix::identity(dim);
  for (int k = 0; k < g->order(); ++k) {
    action.push_back(power);
    for (std::size_t i = 0; i < dim; ++i) power(i, i) *= generator;
  }
  return std::make_shared<const GModule>(g, rank, std::move(torsion), std::move(action));
}

inline ModElement v(long x) { return ModElement{Integer(x)}; }

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline json_io::Json load_fixture(const std::string& name) {
  std::ifstream in(fixture(name));
  return json_io::Json::parse(in);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// The carry cocycle of Z/2 in Z/2: inhomogeneous c(1,1) = 1, zero elsewhere.
inline Cochain carry_cocycle(const ModulePtr& a) {
  InhomogeneousCochain c(a, 2);
  const std::vector<Element> t{1, 1};
  c.set(t, v(1));
  return homogeneous_of(c);
}

}  // namespace testing_util
