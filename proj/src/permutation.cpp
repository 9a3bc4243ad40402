#include "gcensus/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gcensus {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial range is [0, 20]");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

permutation::permutation(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("permutation size out of [1, 16]");
  img_.resize(static_cast<std::size_t>(n));
  std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

permutation permutation::from_images(const std::vector<int>& images_1based) {
  const int n = static_cast<int>(images_1based.size());
  if (n < 1 || n > 16) throw std::invalid_argument("permutation size out of [1, 16]");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    const int w = images_1based[static_cast<std::size_t>(v)];
    if (w < 1 || w > n || seen[static_cast<std::size_t>(w - 1)])
      throw std::invalid_argument("image sequence is not a permutation of 1.." +
                                  std::to_string(n));
    seen[static_cast<std::size_t>(w - 1)] = true;
    img[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(w - 1);
  }
  return permutation(std::move(img));
}

permutation permutation::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t v = 0; v < img_.size(); ++v)
    inv[img_[v]] = static_cast<std::uint8_t>(v);
  return permutation(std::move(inv));
}

permutation compose(const permutation& f, const permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> img(static_cast<std::size_t>(f.size()));
  for (int v = 1; v <= f.size(); ++v)
    img[static_cast<std::size_t>(v - 1)] = f.image(g.image(v));
  return permutation::from_images(img);
}

cycle_type cycle_type_of(const permutation& a) {
  const int n = a.size();
  cycle_type t;
  t.counts.assign(static_cast<std::size_t>(n), 0);
  std::uint32_t visited = 0;
  for (int v = 0; v < n; ++v) {
    if (visited >> v & 1u) continue;
    int len = 0;
    int u = v;
    do {
      visited |= std::uint32_t{1} << u;
      u = a.raw()[u];
      ++len;
    } while (u != v);
    ++t.counts[static_cast<std::size_t>(len - 1)];
  }
  return t;
}

permutation nth_permutation(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("rank >= n!");
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    const std::uint64_t f = factorial(n - 1 - pos);
    const std::size_t idx = static_cast<std::size_t>(rank / f);
    rank %= f;
    img.push_back(avail[idx]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return permutation::from_images(img);
}

permutation parse_cycles(int n, const std::string& text) {
  if (n < 1 || n > 16) throw std::invalid_argument("permutation size out of [1, 16]");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);

  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty cycle notation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') { ++pos; break; }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw std::invalid_argument("expected label in cycle notation");
      const int v = std::stoi(text.substr(pos, end - pos));
      pos = end;
      if (v < 1 || v > n) throw std::invalid_argument("label out of 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)]) throw std::invalid_argument("repeated label " + std::to_string(v));
      seen[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
    }
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t t = 0; t < cycle.size(); ++t)
      img[static_cast<std::size_t>(cycle[t] - 1)] = cycle[(t + 1) % cycle.size()];
    skip_ws();
  }
  return permutation::from_images(img);
}

std::string format_cycles(const permutation& a) {
  const int n = a.size();
  std::ostringstream out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v = 1; v <= n; ++v) {
    if (seen[static_cast<std::size_t>(v - 1)]) continue;
    out << '(';
    int u = v;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << u;
      seen[static_cast<std::size_t>(u - 1)] = true;
      u = a.image(u);
    } while (u != v);
    out << ')';
  }
  return out.str();
}

}  // namespace gcensus
