#include "gerbeforge/simplicial/simplicial.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "gerbeforge/error.hpp"

namespace gf {

const std::vector<Monotone>& surjections(int n, int i) {
  static std::mutex guard;
  static std::map<std::pair<int, int>, std::vector<Monotone>> cache;
  std::lock_guard lock(guard);
  auto [it, inserted] = cache.try_emplace({n, i});
  if (!inserted) return it->second;
  if (n < 0 || i < 0 || i > n) return it->second;
  // Non-decreasing value lists from 0 to i, climbing by at most one.
  Monotone s(n + 1, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n + 1) {
      if (s.back() == i) it->second.push_back(s);
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      s[pos] = s[pos - 1] + step;
      if (s[pos] <= i) self(self, pos + 1);
    }
  };
  if (n == 0) {
    if (i == 0) it->second.push_back(s);
  } else {
    rec(rec, 1);
  }
  return it->second;
}

Monotone after_coface(const Monotone& s, int k) {
  Monotone out = s;
  out.erase(out.begin() + k);
  return out;
}

Monotone after_codegeneracy(const Monotone& s, int k) {
  Monotone out = s;
  out.insert(out.begin() + k, s[k]);
  return out;
}

bool is_surjective_onto(const Monotone& s, int m) {
  for (int v = 0; v <= m; ++v)
    if (std::find(s.begin(), s.end(), v) == s.end()) return false;
  return true;
}

SimplicialAbelianGroup::SimplicialAbelianGroup(std::vector<GroupPtr> levels,
                                               std::vector<std::vector<GroupHom>> faces,
                                               std::vector<std::vector<GroupHom>> degeneracies)
    : levels_(std::move(levels)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  const int top = this->top();
  if (top < 0 || faces_.size() != levels_.size() || degeneracies_.size() != levels_.size())
    throw DimensionMismatch("simplicial group: one face and degeneracy list per level");
  for (int n = 0; n <= top; ++n) {
    if (faces_[n].size() != static_cast<std::size_t>(n == 0 ? 0 : n + 1))
      throw DimensionMismatch("simplicial group: level " + std::to_string(n) + " needs n + 1 faces");
    if (degeneracies_[n].size() != static_cast<std::size_t>(n == top ? 0 : n + 1))
      throw DimensionMismatch("simplicial group: level " + std::to_string(n) +
                              " needs n + 1 degeneracies");
    for (const auto& d : faces_[n])
      if (!same_group(d.source(), levels_[n]) || !same_group(d.target(), levels_[n - 1]))
        throw ParentMismatch("simplicial group: face map between the wrong levels");
    for (const auto& s : degeneracies_[n])
      if (!same_group(s.source(), levels_[n]) || !same_group(s.target(), levels_[n + 1]))
        throw ParentMismatch("simplicial group: degeneracy between the wrong levels");
  }
}

EilenbergMacLane::EilenbergMacLane(GroupPtr m, int i, int top)
    : m_(std::move(m)), i_(i), object_({trivial_group()}, {{}}, {{}}) {
  if (i != 1 && i != 2) throw InvalidInput("K(M, i) is supported for i in {1, 2}");
  if (top < i || top > 4) throw InvalidInput("K(M, i) is supported up to level 4");
  std::vector<GroupPtr> levels;
  for (int n = 0; n <= top; ++n) {
    sums_.push_back(direct_sum(std::vector<GroupPtr>(surjections(n, i).size(), m_)));
    levels.push_back(sums_.back().group);
  }
  // Summand s goes to summand s' with identity, or to zero.
  auto map_between = [&](int from, int to, auto&& reindex) {
    GroupHom h = GroupHom::zero(levels[from], levels[to]);
    const auto& src = surjections(from, i);
    const auto& dst = surjections(to, i);
    for (std::size_t a = 0; a < src.size(); ++a) {
      const Monotone t = reindex(src[a]);
      if (!is_surjective_onto(t, i)) continue;
      const auto b = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), t) - dst.begin());
      ensure(b < dst.size(), "K(M, i): reindexed surjection is not listed");
      h = h + compose(sums_[to].injections[b], sums_[from].projections[a]);
    }
    return h;
  };
  std::vector<std::vector<GroupHom>> faces(top + 1), degeneracies(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n > 0)
      for (int k = 0; k <= n; ++k)
        faces[n].push_back(map_between(n, n - 1, [k](const Monotone& s) { return after_coface(s, k); }));
    if (n < top)
      for (int k = 0; k <= n; ++k)
        degeneracies[n].push_back(
            map_between(n, n + 1, [k](const Monotone& s) { return after_codegeneracy(s, k); }));
  }
  object_ = SimplicialAbelianGroup(std::move(levels), std::move(faces), std::move(degeneracies));
}

namespace {

std::size_t summand_index(int n, int i, const Monotone& s) {
  const auto& all = surjections(n, i);
  const auto it = std::find(all.begin(), all.end(), s);
  if (it == all.end()) throw InvalidInput("not a surjection onto the degree");
  return static_cast<std::size_t>(it - all.begin());
}

}  // namespace

GroupHom EilenbergMacLane::summand_injection(int n, const Monotone& s) const {
  return sums_.at(n).injections[summand_index(n, i_, s)];
}

GroupHom EilenbergMacLane::summand_projection(int n, const Monotone& s) const {
  return sums_.at(n).projections[summand_index(n, i_, s)];
}

SimplicialAbelianGroup constant_simplicial(const GroupPtr& m, int top) {
  const GroupHom id = GroupHom::identity(m);
  std::vector<std::vector<GroupHom>> faces(top + 1), degeneracies(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n > 0) faces[n].assign(n + 1, id);
    if (n < top) degeneracies[n].assign(n + 1, id);
  }
  return SimplicialAbelianGroup(std::vector<GroupPtr>(top + 1, m), std::move(faces),
                                std::move(degeneracies));
}

SimplicialAbelianGroup product(const SimplicialAbelianGroup& x, const SimplicialAbelianGroup& y) {
  const int top = std::min(x.top(), y.top());
  std::vector<DirectSum> sums;
  std::vector<GroupPtr> levels;
  for (int n = 0; n <= top; ++n) {
    sums.push_back(direct_sum({x.level(n), y.level(n)}));
    levels.push_back(sums.back().group);
  }
  auto pair = [&](int from, int to, const GroupHom& f, const GroupHom& g) {
    return compose(sums[to].injections[0], compose(f, sums[from].projections[0])) +
           compose(sums[to].injections[1], compose(g, sums[from].projections[1]));
  };
  std::vector<std::vector<GroupHom>> faces(top + 1), degeneracies(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n > 0)
      for (int k = 0; k <= n; ++k) faces[n].push_back(pair(n, n - 1, x.face(n, k), y.face(n, k)));
    if (n < top)
      for (int k = 0; k <= n; ++k)
        degeneracies[n].push_back(pair(n, n + 1, x.degeneracy(n, k), y.degeneracy(n, k)));
  }
  return SimplicialAbelianGroup(std::move(levels), std::move(faces), std::move(degeneracies));
}

std::vector<LawCheck> check_simplicial_identities(const SimplicialAbelianGroup& x) {
  LawCheck faces{"d_i d_j = d_(j-1) d_i for i < j", 0, 0, {}};
  LawCheck degens{"s_i s_j = s_(j+1) s_i for i <= j", 0, 0, {}};
  LawCheck mixed{"d_i s_j mixed identities", 0, 0, {}};
  auto record = [](LawCheck& law, bool ok, const std::string& what) {
    ++law.cases;
    if (ok) return;
    if (law.failures++ == 0) law.first_failure = what;
  };
  const int top = x.top();
  for (int n = 2; n <= top; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        record(faces, compose(x.face(n - 1, i), x.face(n, j)) == compose(x.face(n - 1, j - 1), x.face(n, i)),
               "level " + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        record(degens,
               compose(x.degeneracy(n + 1, i), x.degeneracy(n, j)) ==
                   compose(x.degeneracy(n + 1, j + 1), x.degeneracy(n, i)),
               "level " + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const GroupHom lhs = compose(x.face(n + 1, i), x.degeneracy(n, j));
        GroupHom rhs;
        if (i == j || i == j + 1) {
          rhs = GroupHom::identity(x.level(n));
        } else if (i < j) {
          rhs = compose(x.degeneracy(n - 1, j - 1), x.face(n, i));
        } else {
          rhs = compose(x.degeneracy(n - 1, j), x.face(n, i - 1));
        }
        record(mixed, lhs == rhs,
               "level " + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
  return {faces, degens, mixed};
}

}  // namespace gf
