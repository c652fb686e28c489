#include "jk/permutation.hpp"

#include <numeric>
#include <sstream>

#include "jk/error.hpp"

namespace jk {

Permutation::Permutation(std::uint32_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto v : images) {
    if (v >= images.size() || seen[v])
      fail(ErrKind::invalid_parameter, "image vector is not a bijection");
    seen[v] = true;
  }
  Permutation p(0);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::uint32_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  for (const auto& cyc : cycles) {
    std::vector<bool> in_cycle(degree, false);
    for (auto v : cyc) {
      if (v >= degree) fail(ErrKind::invalid_parameter, "cycle entry out of range");
      if (in_cycle[v]) fail(ErrKind::invalid_parameter, "repeated entry in cycle");
      in_cycle[v] = true;
    }
    if (cyc.size() < 2) continue;
    // Apply the cycle after what we have so far.
    Permutation c(degree);
    for (std::size_t i = 0; i < cyc.size(); ++i) c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    p = c * p;
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    fail(ErrKind::degree_mismatch, "composing permutations of different degree");
  Permutation out(degree());
  for (std::uint32_t x = 0; x < degree(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::uint32_t x = 0; x < degree(); ++x) out.images_[images_[x]] = x;
  return out;
}

bool Permutation::is_identity() const {
  for (std::uint32_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    os << '(' << start;
    done[start] = true;
    for (std::uint32_t x = images_[start]; x != start; x = images_[x]) {
      os << ' ' << x;
      done[x] = true;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

std::vector<std::vector<std::uint32_t>> parse_cycles(const std::string& text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrKind::parse_error, "expected '(' in cycle notation");
    ++i;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrKind::parse_error, "expected point in cycle notation");
      std::uint32_t v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint32_t>(text[i++] - '0');
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) fail(ErrKind::parse_error, "unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace jk
