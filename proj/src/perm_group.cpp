#include "ekr/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ekr/errors.hpp"

namespace ekr {

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (gens_.empty()) gens_.push_back(Perm(degree_));
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw DegreeMismatch("generator degree mismatch");
}

std::vector<Perm> group_closure(const std::vector<Perm>& gens, long long cap) {
  if (gens.empty()) throw InvalidParameter("closure of empty generator list");
  int n = gens[0].degree();
  std::unordered_map<std::string, int> seen;
  std::vector<Perm> elems;
  std::deque<int> todo;
  Perm id(n);
  seen.emplace(id.key(), 0);
  elems.push_back(id);
  todo.push_back(0);
  while (!todo.empty()) {
    Perm cur = elems[todo.front()];
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm next = g * cur;
      auto [it, fresh] = seen.emplace(next.key(), (int)elems.size());
      if (fresh) {
        if ((long long)elems.size() + 1 > cap)
          throw CapExceeded("group closure exceeds element cap");
        elems.push_back(std::move(next));
        todo.push_back(it->second);
      }
    }
  }
  return elems;
}

void PermGroup::ensure_enumerated(long long cap) const {
  if (!elems_.empty()) return;
  std::vector<Perm> elems = group_closure(gens_, cap);
  std::sort(elems.begin(), elems.end());
  elems_ = std::move(elems);
  index_.reserve(elems_.size() * 2);
  for (int i = 0; i < (int)elems_.size(); ++i) index_.emplace(elems_[i].key(), i);
  inverse_.resize(elems_.size());
  for (int i = 0; i < (int)elems_.size(); ++i)
    inverse_[i] = index_.at(elems_[i].inverse().key());
}

const std::vector<Perm>& PermGroup::elements(long long cap) const {
  ensure_enumerated(cap);
  return elems_;
}

long long PermGroup::order(long long cap) const { return (long long)elements(cap).size(); }

int PermGroup::index_of(const Perm& p) const {
  ensure_enumerated(kDefaultCap);
  auto it = index_.find(p.key());
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::inverse_index(int idx) const {
  ensure_enumerated(kDefaultCap);
  return inverse_[idx];
}

int PermGroup::multiply(int a, int b) const {
  ensure_enumerated(kDefaultCap);
  return index_.at((elems_[a] * elems_[b]).key());
}

int PermGroup::identity_index() const { return index_of(Perm(degree_)); }

const std::vector<ConjugacyClass>& PermGroup::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  ensure_enumerated(kDefaultCap);
  int m = (int)elems_.size();
  std::vector<int> cls(m, -1);
  std::vector<ConjugacyClass> classes;
  for (int i = 0; i < m; ++i) {
    if (cls[i] >= 0) continue;
    int id = (int)classes.size();
    ConjugacyClass c;
    cls[i] = id;
    c.members.push_back(i);
    std::deque<int> todo{i};
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (const Perm& g : gens_) {
        Perm y = elems_[x].conjugate_by(g);
        int yi = index_.at(y.key());
        if (cls[yi] < 0) {
          cls[yi] = id;
          c.members.push_back(yi);
          todo.push_back(yi);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    c.cycle_type = elems_[c.representative].cycle_type();
    c.is_derangement_class = elems_[c.representative].is_derangement();
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.representative < b.representative;
  });
  class_of_.assign(m, -1);
  for (int id = 0; id < (int)classes.size(); ++id)
    for (int e : classes[id].members) class_of_[e] = id;
  classes_ = std::move(classes);
  return classes_;
}

int PermGroup::class_of(int element_index) const {
  conjugacy_classes();
  return class_of_[element_index];
}

std::vector<int> PermGroup::derangement_indices() const {
  ensure_enumerated(kDefaultCap);
  std::vector<int> d;
  for (int i = 0; i < (int)elems_.size(); ++i)
    if (elems_[i].is_derangement()) d.push_back(i);
  return d;
}

std::vector<int> PermGroup::derangement_class_ids() const {
  const auto& classes = conjugacy_classes();
  std::vector<int> ids;
  for (int i = 0; i < (int)classes.size(); ++i)
    if (classes[i].is_derangement_class) ids.push_back(i);
  return ids;
}

std::vector<std::vector<int>> PermGroup::point_orbits() const {
  std::vector<int> orbit_of(degree_, -1);
  std::vector<std::vector<int>> orbits;
  for (int p = 0; p < degree_; ++p) {
    if (orbit_of[p] >= 0) continue;
    int id = (int)orbits.size();
    std::vector<int> orb{p};
    orbit_of[p] = id;
    std::deque<int> todo{p};
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (const Perm& g : gens_) {
        int y = g(x);
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          orb.push_back(y);
          todo.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

bool PermGroup::is_transitive() const { return point_orbits().size() == 1; }

namespace {

// Orbit count of the generator action on ordered k-tuples of distinct points.
long long distinct_tuple_orbits(const std::vector<Perm>& gens, int n, int k) {
  // enumerate tuples as mixed-radix over remaining points; use a map keyed by
  // the tuple vector
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      tuples.push_back(cur);
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (used[p]) continue;
      used[p] = 1;
      cur.push_back(p);
      self(self, depth + 1);
      cur.pop_back();
      used[p] = 0;
    }
  };
  rec(rec, 0);
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)tuples.size(); ++i) idx[tuples[i]] = i;
  std::vector<int> comp(tuples.size(), -1);
  long long orbits = 0;
  for (int i = 0; i < (int)tuples.size(); ++i) {
    if (comp[i] >= 0) continue;
    ++orbits;
    comp[i] = 1;
    std::deque<int> todo{i};
    while (!todo.empty()) {
      int t = todo.front();
      todo.pop_front();
      std::vector<int> img(k);
      for (const Perm& g : gens) {
        for (int j = 0; j < k; ++j) img[j] = g(tuples[t][j]);
        int ti = idx.at(img);
        if (comp[ti] < 0) {
          comp[ti] = 1;
          todo.push_back(ti);
        }
      }
    }
  }
  return orbits;
}

// Chain rule: k-transitive iff transitive and the stabilizer of a point is
// (k-1)-transitive on the remaining points. Works on explicit element lists.
bool chain_k_transitive(const std::vector<Perm>& elems, std::vector<int> points, int k) {
  if (k == 0) return true;
  if (points.empty()) return false;
  // transitivity of the element set on `points`
  int base = points[0];
  std::set<int> orbit;
  for (const Perm& g : elems) orbit.insert(g(base));
  std::set<int> pts(points.begin(), points.end());
  if (orbit != pts) return false;
  if (k == 1) return true;
  std::vector<Perm> stab;
  for (const Perm& g : elems)
    if (g(base) == base) stab.push_back(g);
  std::vector<int> rest;
  for (int p : points)
    if (p != base) rest.push_back(p);
  return chain_k_transitive(stab, rest, k - 1);
}

}  // namespace

int PermGroup::transitivity_degree(int max_k) const {
  ensure_enumerated(kDefaultCap);
  if (!is_transitive()) return 0;
  int k = 1;
  while (k < max_k && k < degree_) {
    // test (k+1)-transitivity
    double tuple_count = 1;
    for (int i = 0; i < k + 1; ++i) tuple_count *= (degree_ - i);
    bool ok;
    if (tuple_count <= 2e6) {
      ok = distinct_tuple_orbits(gens_, degree_, k + 1) == 1;
    } else {
      std::vector<int> pts(degree_);
      for (int i = 0; i < degree_; ++i) pts[i] = i;
      ok = chain_k_transitive(elems_, pts, k + 1);
    }
    if (!ok) break;
    ++k;
  }
  return k;
}

std::vector<int> PermGroup::stabilizer(int x) const {
  return coset_of_stabilizer(x, x);
}

std::vector<int> PermGroup::coset_of_stabilizer(int i, int j) const {
  ensure_enumerated(kDefaultCap);
  if (i < 1 || i > degree_ || j < 1 || j > degree_)
    throw InvalidParameter("point out of range");
  std::vector<int> out;
  for (int e = 0; e < (int)elems_.size(); ++e)
    if (elems_[e](i - 1) == j - 1) out.push_back(e);
  return out;
}

FrobeniusInfo PermGroup::frobenius_info() const {
  ensure_enumerated(kDefaultCap);
  if (!is_transitive()) throw NotTransitive("frobenius_info: group is not transitive");
  bool some_fixer = false;
  for (const Perm& g : elems_) {
    if (g.is_identity()) continue;
    int f = g.fixed_points();
    if (f > 1) return {};
    if (f == 1) some_fixer = true;
  }
  if (!some_fixer) return {};
  FrobeniusInfo info;
  info.frobenius = true;
  info.kernel_size = degree_;
  info.complement_size = (long long)elems_.size() / degree_;
  return info;
}

std::vector<int> PermGroup::derived_subgroup() const {
  ensure_enumerated(kDefaultCap);
  // G' = closure of the normal closure of the generator commutators.
  std::vector<Perm> seed{Perm(degree_)};
  for (const Perm& a : gens_)
    for (const Perm& b : gens_) seed.push_back(a * b * a.inverse() * b.inverse());
  std::set<std::string> seedkeys;
  std::deque<Perm> work(seed.begin(), seed.end());
  std::vector<Perm> normal_seed;
  while (!work.empty()) {
    Perm p = work.front();
    work.pop_front();
    if (!seedkeys.insert(p.key()).second) continue;
    normal_seed.push_back(p);
    for (const Perm& g : gens_) work.push_back(p.conjugate_by(g));
  }
  std::vector<Perm> derived = group_closure(normal_seed, (long long)elems_.size());
  std::vector<int> out;
  out.reserve(derived.size());
  for (const Perm& p : derived) out.push_back(index_.at(p.key()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> small_generating_set(const std::vector<Perm>& elements) {
  if (elements.empty()) throw InvalidParameter("empty element set");
  std::vector<Perm> gens;
  size_t covered = 1;
  std::set<std::string> have{Perm(elements[0].degree()).key()};
  for (const Perm& e : elements) {
    if (have.count(e.key())) continue;
    gens.push_back(e);
    std::vector<Perm> closure = group_closure(gens, (long long)elements.size());
    have.clear();
    for (const Perm& c : closure) have.insert(c.key());
    covered = closure.size();
    if (covered == elements.size()) break;
  }
  return gens;
}

}  // namespace ekr
