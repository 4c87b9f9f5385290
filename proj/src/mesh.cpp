#include "fraclap/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "fraclap/special_functions.hpp"

namespace fraclap {

namespace {

void check_interval(double a, double b, int n) {
  if (!(a < b)) throw Error("domain_error", "mesh requires a < b");
  if (n < 2) throw Error("domain_error", "mesh requires N >= 2");
}

}  // namespace

Mesh Mesh::from_nodes(std::vector<double> nodes) {
  if (nodes.size() < 3) {
    throw Error("domain_error", "mesh requires at least N = 2 elements");
  }
  for (size_t j = 1; j < nodes.size(); ++j) {
    if (!(nodes[j - 1] < nodes[j])) {
      throw Error("domain_error", "mesh nodes must be strictly increasing");
    }
  }
  return Mesh(std::move(nodes));
}

bool Mesh::nearly_uniform(double rel_tol) const {
  const double h1 = spacing(1);
  for (int j = 2; j <= intervals(); ++j) {
    if (std::abs(spacing(j) - h1) > rel_tol * h1) return false;
  }
  return true;
}

Mesh build_uniform(double a, double b, int n) {
  check_interval(a, b, n);
  std::vector<double> nodes(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    nodes[static_cast<size_t>(j)] = a + (b - a) * (static_cast<double>(j) / n);
  }
  nodes.front() = a;
  nodes.back() = b;
  return Mesh::from_nodes(std::move(nodes));
}

Mesh build_power_left(double a, double b, int n, double alpha) {
  check_interval(a, b, n);
  if (!(alpha >= 1.0)) {
    throw Error("domain_error", "power grading requires alpha >= 1");
  }
  std::vector<double> nodes(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    nodes[static_cast<size_t>(j)] =
        a + (b - a) * std::pow(static_cast<double>(j) / n, alpha);
  }
  nodes.front() = a;
  nodes.back() = b;
  return Mesh::from_nodes(std::move(nodes));
}

Mesh build_power_symmetric(double a, double b, int n, double alpha) {
  check_interval(a, b, n);
  if (n % 2 != 0 || n < 4) {
    throw Error("domain_error", "symmetric power grading requires even N >= 4");
  }
  if (!(alpha >= 1.0)) {
    throw Error("domain_error", "power grading requires alpha >= 1");
  }
  const double half = 0.5 * (b - a);
  std::vector<double> nodes(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const double t = 2.0 * j / n;
    nodes[static_cast<size_t>(j)] = (j < n / 2)
                                        ? a + half * std::pow(t, alpha)
                                        : b - half * std::pow(2.0 - t, alpha);
  }
  nodes.front() = a;
  nodes.back() = b;
  return Mesh::from_nodes(std::move(nodes));
}

Mesh build_beta_mapped(double a, double b, int n, double alpha, double beta_) {
  check_interval(a, b, n);
  const double total = beta(alpha, beta_);  // validates alpha, beta_ > 0
  if (!(alpha >= 1.0) || !(beta_ >= 1.0)) {
    throw Error("domain_error", "beta-mapped grading requires alpha, beta >= 1");
  }
  std::vector<double> nodes(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    const double y = static_cast<double>(j) / n;
    nodes[static_cast<size_t>(j)] =
        a + (b - a) * (incomplete_beta(y, alpha, beta_) / total);
  }
  nodes.front() = a;
  nodes.back() = b;
  return Mesh::from_nodes(std::move(nodes));
}

MeshStats mesh_stats(const Mesh& mesh) {
  double h_max = 0.0;
  double h_min = mesh.spacing(1);
  for (int j = 1; j <= mesh.intervals(); ++j) {
    const double h = mesh.spacing(j);
    h_max = std::max(h_max, h);
    h_min = std::min(h_min, h);
  }
  return MeshStats{h_max, h_min, h_max / h_min};
}

void write_nodes(const Mesh& mesh, std::ostream& out) {
  char buf[40];
  for (double x : mesh.nodes()) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf << '\n';
  }
}

Mesh read_nodes(std::istream& in) {
  std::vector<double> nodes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(line, &pos);
    } catch (const std::exception&) {
      throw Error("io_error", "unparseable mesh node line: " + line);
    }
    nodes.push_back(v);
  }
  return Mesh::from_nodes(std::move(nodes));
}

}  // namespace fraclap
