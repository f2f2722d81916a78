#include "ekr/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ekr/errors.hpp"

namespace ekr {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw InvalidParameter("images sequence is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::operator*(const Perm& q) const {
  if (degree() != q.degree()) throw DegreeMismatch("compose: degree mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[i] = img_[q.img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::conjugate_by(const Perm& g) const {
  // (g * this * g^-1)(x) = g(this(g^-1(x)))
  if (degree() != g.degree()) throw DegreeMismatch("conjugate: degree mismatch");
  std::vector<int> r(img_.size());
  for (int i = 0; i < degree(); ++i) r[g.img_[i]] = g.img_[img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::fixed_points() const {
  int c = 0;
  for (int i = 0; i < degree(); ++i) c += (img_[i] == i);
  return c;
}

bool Perm::even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

int Perm::order() const {
  long long o = 1;
  for (int len : cycle_type()) o = std::lcm(o, (long long)len);
  return static_cast<int>(o);
}

std::vector<int> Perm::cycle_type() const {
  std::vector<char> seen(img_.size(), 0);
  std::vector<int> type;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

Perm Perm::restricted(int m) const {
  std::vector<int> r(m);
  for (int i = 0; i < m; ++i) {
    if (img_[i] >= m) throw InvalidParameter("restricted: point maps outside range");
    r[i] = img_[i];
  }
  return Perm(std::move(r));
}

std::string Perm::one_line() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << img_[i] + 1;
  }
  os << ']';
  return os.str();
}

std::string Perm::cycles() const {
  std::vector<char> seen(img_.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = 1;
      continue;
    }
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) os << ',';
      os << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

std::string Perm::key() const {
  std::string s;
  s.reserve(img_.size());
  for (int v : img_) s.push_back(static_cast<char>(v));
  return s;
}

Perm Perm::parse_cycles(int n, const std::string& text) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ',')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
      if (j == i) throw ParseError("expected point number in cycle notation: " + text);
      int pt = std::stoi(text.substr(i, j - i));
      if (pt < 1 || pt > n) throw ParseError("point out of range in cycle notation: " + text);
      cyc.push_back(pt - 1);
      i = j;
    }
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (img[from] != from) throw ParseError("cycles are not disjoint: " + text);
      img[from] = to;
    }
    skip_ws();
  }
  return Perm(std::move(img));
}

}  // namespace ekr
