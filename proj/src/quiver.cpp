#include "coalglab/quiver.hpp"

#include <algorithm>
#include <set>

namespace coalglab {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> vs(vertices_.begin(), vertices_.end());
  if (vs.size() != vertices_.size()) throw input_error("Quiver: duplicate vertex labels");
  std::set<std::string> as;
  for (const Arrow& a : arrows_) {
    if (!vs.count(a.src) || !vs.count(a.tgt))
      throw input_error("Quiver: arrow endpoint not a declared vertex: " + a.label);
    if (!as.insert(a.label).second)
      throw input_error("Quiver: duplicate arrow label: " + a.label);
  }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  throw input_error("Quiver: unknown vertex: " + label);
}

std::size_t Quiver::pair_count(const std::string& src, const std::string& tgt) const {
  std::size_t n = 0;
  for (const Arrow& a : arrows_)
    if (a.src == src && a.tgt == tgt) ++n;
  return n;
}

bool Quiver::arrows_same(const Quiver& b) const {
  if (arrows_.size() != b.arrows_.size()) return false;
  // order-insensitive comparison by (label, src, tgt)
  auto key = [](const Arrow& a) { return a.label + "\x01" + a.src + "\x01" + a.tgt; };
  std::vector<std::string> ka, kb;
  for (const Arrow& a : arrows_) ka.push_back(key(a));
  for (const Arrow& a : b.arrows_) kb.push_back(key(a));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

Quiver Quiver::single_arrow() { return Quiver({"a", "b"}, {{"alpha", "a", "b"}}); }

Quiver Quiver::kronecker(std::size_t k) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < k; ++i)
    arrows.push_back({"alpha" + std::to_string(i + 1), "a", "b"});
  return Quiver({"a", "b"}, std::move(arrows));
}

Quiver Quiver::loops(std::size_t k) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < k; ++i)
    arrows.push_back({"z" + std::to_string(i + 1), "g", "g"});
  return Quiver({"g"}, std::move(arrows));
}

Quiver Quiver::line(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    arrows.push_back({"a" + std::to_string(i), "v" + std::to_string(i),
                      "v" + std::to_string(i + 1)});
  return Quiver(std::move(vs), std::move(arrows));
}

Quiver Quiver::cycle(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<Arrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i)
    arrows.push_back({"c" + std::to_string(i), "v" + std::to_string(i),
                      "v" + std::to_string(i % n + 1)});
  return Quiver(std::move(vs), std::move(arrows));
}

}  // namespace coalglab
