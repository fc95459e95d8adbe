#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gf {

// Strictly increasing list of cover indices.
using Face = std::vector<int>;

std::string face_to_string(const Face& f);

// Nerve of a finite cover, truncated at dimension 3 (faces of up to four
// indices). Singletons are always present and the face set is closed under
// taking nonempty subsets. Faces are numbered by dimension, then
// lexicographically.
class CoverNerve {
 public:
  static constexpr int max_dimension = 3;

  // Every nonempty subset of size <= 4 of some listed face.
  static CoverNerve from_maximal_faces(int index_count, const std::vector<Face>& maximal);
  // Three opens, pairwise overlaps, empty triple overlap.
  static CoverNerve circle();
  // All subsets of {0..n-1} of size <= 4.
  static CoverNerve full_simplex(int n);
  // Four opens whose nerve is the boundary of a tetrahedron.
  static CoverNerve sphere();
  // The two standard affine charts of the projective line.
  static CoverNerve two_chart();

  int index_count() const { return index_count_; }
  std::size_t face_count() const { return faces_.size(); }
  const Face& face(std::size_t id) const { return faces_[id]; }
  // Global ids of the faces of dimension p, lexicographic.
  const std::vector<std::size_t>& faces_of_dimension(int p) const;
  std::size_t count(int p) const { return faces_of_dimension(p).size(); }
  // Position of a face within its dimension.
  std::size_t position(std::size_t id) const { return position_[id]; }

  std::optional<std::size_t> find(const Face& f) const;
  std::size_t id(const Face& f) const;  // throws InvalidInput when absent
  bool contains(const Face& f) const { return find(f).has_value(); }

  // Euler characteristic of the truncated nerve.
  long euler_characteristic() const;

  friend bool operator==(const CoverNerve& a, const CoverNerve& b) {
    return a.index_count_ == b.index_count_ && a.faces_ == b.faces_;
  }

 private:
  CoverNerve(int index_count, std::vector<Face> faces);

  int index_count_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> by_dimension_;
  std::vector<std::size_t> position_;
  std::map<Face, std::size_t> lookup_;
};

using NervePtr = std::shared_ptr<const CoverNerve>;

NervePtr make_nerve(CoverNerve n);

// Face with the k-th index removed.
Face omit(const Face& f, std::size_t k);

}  // namespace gf
