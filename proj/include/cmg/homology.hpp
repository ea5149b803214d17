#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cmg/complex.hpp"
#include "cmg/verdict.hpp"

namespace cmg {

/// Coefficient field: GF(p) for a prime p, or the rationals.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InputError unless p is a prime below kernels::kMaxModulus.
  static Field prime(std::uint32_t p);
  /// "Q", "0" or "rationals" for the rationals, otherwise a prime.
  static Field parse(std::string_view text);

  bool is_rational() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }
  std::string name() const;
  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t c) : characteristic_(c) {}
  std::uint32_t characteristic_;
};

inline constexpr std::size_t kDefaultHomologyFaceLimit = 4096;

struct HomologyProfile {
  NameSet face;
  int link_dim = -1;
  std::vector<std::size_t> reduced_betti;  // dimensions -1 .. link_dim
  Field field = Field::prime(2);
};

/// Reduced Betti numbers in dimensions -1 .. dim c from boundary-matrix
/// ranks. Throws CapacityError above `face_limit` faces.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                                std::size_t face_limit = kDefaultHomologyFaceLimit);

/// lk(F) = {G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ}, on the same vertex names
/// restricted to the vertices it uses.
SimplicialComplex link(const SimplicialComplex& c, VertexSet face);

/// Reduced homology of lk(F).
HomologyProfile link_profile(const SimplicialComplex& c, VertexSet face, Field field,
                             std::size_t face_limit = kDefaultHomologyFaceLimit);

/// Reisner's criterion: Δ is Cohen-Macaulay over the field iff every link
/// (∅ included) has vanishing reduced homology below its dimension. False
/// verdicts carry the first offending face in size-then-lex order.
Verdict reisner_cm(const SimplicialComplex& c, Field field, std::size_t face_limit = kDefaultHomologyFaceLimit);

}  // namespace cmg
