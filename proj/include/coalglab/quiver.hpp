#pragma once

#include <string>
#include <vector>

#include "coalglab/scalar.hpp"

namespace coalglab {

struct Arrow {
  std::string label, src, tgt;
};

// Finite presented quiver: distinct vertex labels, distinct arrow labels,
// arrow endpoints declared.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_index(const std::string& label) const;

  // arrows from src to tgt
  std::size_t pair_count(const std::string& src, const std::string& tgt) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_same(b);
  }
  friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }

  // generators used throughout the test corpus
  static Quiver single_arrow();            // a -> b
  static Quiver kronecker(std::size_t k);  // a =k=> b; k = 3 is the wild reference
  static Quiver loops(std::size_t k);      // one vertex, k loops
  static Quiver line(std::size_t n);       // v1 -> v2 -> ... -> vn
  static Quiver cycle(std::size_t n);      // n-cycle

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  bool arrows_same(const Quiver& b) const;
};

}  // namespace coalglab
