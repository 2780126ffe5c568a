#include "revsc/transform.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace revsc {

namespace {

std::vector<std::uint16_t> check_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw std::invalid_argument("transformation degree must be >= 1");
  if (n > 65535)
    throw std::invalid_argument("transformation degree above 65535");
  std::vector<std::uint16_t> raw(images.size());
  for (int q = 0; q < n; ++q) {
    if (images[q] < 1 || images[q] > n) {
      throw std::invalid_argument("image entry " + std::to_string(images[q]) +
                                  " outside 1.." + std::to_string(n));
    }
    raw[q] = static_cast<std::uint16_t>(images[q] - 1);
  }
  return raw;
}

void check_bijective(std::span<const std::uint16_t> raw) {
  std::vector<bool> seen(raw.size(), false);
  for (std::uint16_t v : raw) {
    if (seen[v]) throw std::invalid_argument("not a permutation: repeated image");
    seen[v] = true;
  }
}

}  // namespace

Transformation::Transformation(std::span<const int> images_one_based)
    : images_(check_images(images_one_based)) {}

Transformation Transformation::identity(int degree) {
  if (degree < 1 || degree > 65535)
    throw std::invalid_argument("degree outside 1..65535");
  std::vector<std::uint16_t> raw(degree);
  std::iota(raw.begin(), raw.end(), 0);
  return Transformation(RawTag{}, std::move(raw));
}

int Transformation::rank() const {
  std::vector<bool> seen(images_.size(), false);
  int r = 0;
  for (std::uint16_t v : images_) {
    r += !seen[v];
    seen[v] = true;
  }
  return r;
}

std::string Transformation::to_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t q = 0; q < images_.size(); ++q) {
    if (q) os << ',';
    os << int(images_[q]) + 1;
  }
  os << ']';
  return os.str();
}

Permutation::Permutation(std::span<const int> images_one_based)
    : Transformation(images_one_based) {
  check_bijective(images_);
}

Permutation::Permutation(const Transformation& t) : Transformation(t) {
  check_bijective(images_);
}

Permutation Permutation::identity(int degree) {
  return Permutation(Transformation::identity(degree));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> raw(images_.size());
  for (std::size_t q = 0; q < images_.size(); ++q)
    raw[images_[q]] = static_cast<std::uint16_t>(q);
  return Permutation(Transformation::from_raw(std::move(raw)));
}

std::string Permutation::to_cycles() const {
  const int n = degree();
  std::vector<bool> done(n, false);
  std::ostringstream os;
  bool any = false;
  for (int q = 0; q < n; ++q) {
    if (done[q] || images_[q] == q) continue;
    any = true;
    os << '(';
    int c = q;
    bool first = true;
    do {
      if (!first) os << ',';
      os << c + 1;
      done[c] = true;
      first = false;
      c = images_[c];
    } while (c != q);
    os << ')';
  }
  return any ? os.str() : "()";
}

Transformation compose(const Transformation& s, const Transformation& t) {
  if (s.degree() != t.degree())
    throw std::invalid_argument("compose: degree mismatch");
  auto sr = s.raw(), tr = t.raw();
  std::vector<int> images(sr.size());
  for (std::size_t q = 0; q < sr.size(); ++q) images[q] = sr[tr[q]] + 1;
  return Transformation(images);
}

Permutation compose(const Permutation& s, const Permutation& t) {
  return Permutation(compose(static_cast<const Transformation&>(s),
                             static_cast<const Transformation&>(t)));
}

Transformation conjugate(const Transformation& t, const Permutation& g) {
  if (t.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // (g . t . g^-1)(g(q)) = g(t(q)), so fill position g(q) directly.
  auto tr = t.raw(), gr = g.raw();
  std::vector<int> images(tr.size());
  for (std::size_t q = 0; q < tr.size(); ++q) images[gr[q]] = gr[tr[q]] + 1;
  return Transformation(images);
}

std::uint64_t permutation_order(const Permutation& p) {
  const int n = p.degree();
  auto raw = p.raw();
  std::vector<bool> done(n, false);
  std::uint64_t order = 1;
  for (int q = 0; q < n; ++q) {
    if (done[q]) continue;
    std::uint64_t len = 0;
    int c = q;
    do {
      done[c] = true;
      ++len;
      c = raw[c];
    } while (c != q);
    order = std::lcm(order, len);
  }
  return order;
}

Permutation permutation_power(const Permutation& p, std::uint64_t e) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

namespace {

void skip_ws(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(std::string_view s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw std::invalid_argument("expected a number");
  return std::stoi(std::string(s.substr(start, i - start)));
}

}  // namespace

Transformation parse_list(std::string_view text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument("list notation must start with '['");
  ++i;
  std::vector<int> images;
  skip_ws(text, i);
  if (i < text.size() && text[i] == ']') {
    throw std::invalid_argument("empty list notation");
  }
  while (true) {
    images.push_back(parse_int(text, i));
    skip_ws(text, i);
    if (i >= text.size()) throw std::invalid_argument("unterminated list");
    if (text[i] == ']') {
      ++i;
      break;
    }
    if (text[i] != ',') throw std::invalid_argument("expected ',' or ']'");
    ++i;
  }
  skip_ws(text, i);
  if (i != text.size())
    throw std::invalid_argument("trailing characters after list");
  return Transformation(images);
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  skip_ws(text, i);
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws(text, i);
    while (i < text.size() && text[i] != ')') {
      int v = parse_int(text, i);
      if (v < 1 || v > degree)
        throw std::invalid_argument("cycle entry " + std::to_string(v) +
                                    " outside 1.." + std::to_string(degree));
      if (used[v - 1])
        throw std::invalid_argument("repeated element " + std::to_string(v) +
                                    " across cycles");
      used[v - 1] = true;
      cycle.push_back(v);
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws(text, i);
      }
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t j = 0; j < cycle.size(); ++j)
      images[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    skip_ws(text, i);
  }
  return Permutation(images);
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace revsc
