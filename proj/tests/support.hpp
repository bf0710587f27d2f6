#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3deg/complex.hpp"
#include "k3deg/complex_io.hpp"

namespace testing {

inline std::string corpus_path(const std::string& name) { return std::string(K3DEG_CORPUS_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline k3deg::IntersectionComplex corpus(const std::string& name) {
  return k3deg::load_complex(corpus_path(name));
}

inline const std::vector<std::string>& corpus_complexes() {
  static const std::vector<std::string> names{"fig3.json", "fig7.json", "fig9.json", "cube.json",
                                              "tetrahedron_naive.json"};
  return names;
}

/// Same labeled map with fresh ids, shuffled edge and face order, rotated
/// boundaries, randomly swapped edge sides and, half the time, reversed
/// orientation.
inline k3deg::IntersectionComplex scramble(const k3deg::IntersectionComplex& c, std::mt19937& rng) {
  using namespace k3deg;
  const std::size_t ne = c.edges().size();
  std::vector<std::size_t> perm(ne);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);  // old edge -> new position
  std::vector<bool> swap(ne);
  for (std::size_t e = 0; e < ne; ++e) swap[e] = rng() % 2 == 1;

  std::vector<EdgeRecord> edges(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    EdgeRecord r = c.edges()[e];
    r.id = "x" + std::to_string(rng() % 100000) + "_" + std::to_string(perm[e]);
    if (swap[e]) std::swap(r.label_a, r.label_b);
    edges[perm[e]] = r;
  }
  const bool reverse = rng() % 2 == 1;
  std::vector<Face> faces;
  for (const auto& f : c.faces()) {
    Face g;
    g.id = "f" + std::to_string(rng() % 100000) + "_" + std::to_string(faces.size());
    for (const auto& d : f.boundary) g.boundary.push_back(Dart{perm[d.edge], swap[d.edge] ? opposite(d.side) : d.side});
    if (reverse) std::reverse(g.boundary.begin(), g.boundary.end());
    std::rotate(g.boundary.begin(), g.boundary.begin() + static_cast<long>(rng() % g.boundary.size()),
                g.boundary.end());
    faces.push_back(std::move(g));
  }
  std::shuffle(faces.begin(), faces.end(), rng);
  return IntersectionComplex(ComplexMeta{"scrambled", {}, {}}, std::move(edges), std::move(faces));
}

/// Face successor on darts, computed straight from the boundary lists.
inline std::vector<std::size_t> raw_successor(const k3deg::IntersectionComplex& c) {
  std::vector<std::size_t> next(c.dart_count());
  for (const auto& f : c.faces()) {
    for (std::size_t i = 0; i < f.boundary.size(); ++i) {
      const auto& d = f.boundary[i];
      const auto& n = f.boundary[(i + 1) % f.boundary.size()];
      next[2 * d.edge + static_cast<std::size_t>(d.side)] = 2 * n.edge + static_cast<std::size_t>(n.side);
    }
  }
  return next;
}

/// All dart bijections from a onto b that respect edges and the face
/// successor, either directly or with orientation reversed. Brute force on
/// the first dart's image, then propagation.
inline std::vector<std::vector<std::size_t>> map_isomorphisms(const k3deg::IntersectionComplex& a,
                                                              const k3deg::IntersectionComplex& b) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = a.dart_count();
  if (b.dart_count() != n || n == 0) return out;
  const auto na = raw_successor(a);
  const auto nb = raw_successor(b);
  std::vector<std::size_t> pb(n);
  for (std::size_t d = 0; d < n; ++d) pb[nb[d]] = d;
  for (int reversed = 0; reversed < 2; ++reversed) {
    const auto& succ_b = reversed ? pb : nb;
    for (std::size_t img = 0; img < n; ++img) {
      std::vector<std::size_t> phi(n, n);
      std::vector<bool> used(n, false);
      std::vector<std::size_t> stack{0};
      phi[0] = img;
      used[img] = true;
      bool ok = true;
      while (ok && !stack.empty()) {
        const std::size_t d = stack.back();
        stack.pop_back();
        const std::pair<std::size_t, std::size_t> links[] = {{na[d], succ_b[phi[d]]}, {d ^ 1U, phi[d] ^ 1U}};
        for (auto [x, y] : links) {
          if (phi[x] == n) {
            if (used[y]) {
              ok = false;
              break;
            }
            phi[x] = y;
            used[y] = true;
            stack.push_back(x);
          } else if (phi[x] != y) {
            ok = false;
            break;
          }
        }
      }
      if (ok && std::find(phi.begin(), phi.end(), n) == phi.end()) out.push_back(phi);
    }
  }
  return out;
}

}  // namespace testing
