#include "gerbeforge/cech/nerve.hpp"

#include <algorithm>
#include <set>

#include "gerbeforge/error.hpp"

namespace gf {

std::string face_to_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

Face omit(const Face& f, std::size_t k) {
  Face out;
  out.reserve(f.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != k) out.push_back(f[i]);
  return out;
}

CoverNerve::CoverNerve(int index_count, std::vector<Face> faces)
    : index_count_(index_count), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  by_dimension_.assign(max_dimension + 1, {});
  position_.resize(faces_.size());
  for (std::size_t id = 0; id < faces_.size(); ++id) {
    auto& bucket = by_dimension_[faces_[id].size() - 1];
    position_[id] = bucket.size();
    bucket.push_back(id);
    lookup_.emplace(faces_[id], id);
  }
}

CoverNerve CoverNerve::from_maximal_faces(int index_count, const std::vector<Face>& maximal) {
  if (index_count < 1) throw InvalidInput("nerve needs at least one index");
  std::set<Face> faces;
  for (int i = 0; i < index_count; ++i) faces.insert({i});
  for (Face f : maximal) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw InvalidInput("empty face in nerve description");
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidInput("repeated index in face " + face_to_string(f));
    if (f.front() < 0 || f.back() >= index_count)
      throw InvalidInput("face " + face_to_string(f) + " uses an index outside 0.." +
                         std::to_string(index_count - 1));
    const std::size_t n = f.size();
    if (n > 20) throw InvalidInput("face " + face_to_string(f) + " is too large");
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
      if (__builtin_popcountl(mask) > max_dimension + 1) continue;
      Face sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1ul << i)) sub.push_back(f[i]);
      faces.insert(std::move(sub));
    }
  }
  return CoverNerve(index_count, {faces.begin(), faces.end()});
}

CoverNerve CoverNerve::circle() { return from_maximal_faces(3, {{0, 1}, {0, 2}, {1, 2}}); }

CoverNerve CoverNerve::full_simplex(int n) {
  Face all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return from_maximal_faces(n, {all});
}

CoverNerve CoverNerve::sphere() {
  return from_maximal_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

CoverNerve CoverNerve::two_chart() { return from_maximal_faces(2, {{0, 1}}); }

const std::vector<std::size_t>& CoverNerve::faces_of_dimension(int p) const {
  if (p < 0 || p > max_dimension)
    throw InvalidInput("face dimension " + std::to_string(p) + " outside 0..3");
  return by_dimension_[p];
}

std::optional<std::size_t> CoverNerve::find(const Face& f) const {
  auto it = lookup_.find(f);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t CoverNerve::id(const Face& f) const {
  auto found = find(f);
  if (!found) throw InvalidInput("face " + face_to_string(f) + " is not in the nerve");
  return *found;
}

long CoverNerve::euler_characteristic() const {
  long chi = 0;
  for (int p = 0; p <= max_dimension; ++p)
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(count(p));
  return chi;
}

NervePtr make_nerve(CoverNerve n) { return std::make_shared<const CoverNerve>(std::move(n)); }

}  // namespace gf
