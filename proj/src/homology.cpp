#include "cmg/homology.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "cmg/errors.hpp"
#include "cmg/kernels.hpp"
#include "cmg/linalg.hpp"

namespace cmg {

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= kernels::kMaxModulus) {
    throw InputError("field characteristic " + std::to_string(p) + " is not a prime below " +
                     std::to_string(kernels::kMaxModulus));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "q" || text == "0" || text == "rationals") return rationals();
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("field must be a prime or Q, got '" + std::string(text) + "'");
  }
  return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")"; }

namespace {

std::size_t rank_in(const IntMatrix& m, Field field) {
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

// faces: every face of a complex, ∅ included, sorted by size.
std::vector<std::size_t> reduced_betti(const std::vector<VertexSet>& faces, Field field) {
  std::size_t top = 0;
  for (VertexSet f : faces) top = std::max(top, f.size());
  // by_size[s] = faces with s vertices (dimension s - 1).
  std::vector<std::vector<VertexSet>> by_size(top + 1);
  for (VertexSet f : faces) by_size[f.size()].push_back(f);

  // rank_boundary[s] = rank of ∂ from faces of size s to size s-1, s >= 1.
  std::vector<std::size_t> rank_boundary(top + 2, 0);
  for (std::size_t s = 1; s <= top; ++s) {
    const auto& cols = by_size[s];
    const auto& rows = by_size[s - 1];
    if (cols.empty() || rows.empty()) continue;
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r].bits(), r);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (Vertex v : cols[c]) {
        m.at(row_of.at((cols[c] - VertexSet::single(v)).bits()), c) = sign;
        sign = -sign;
      }
    }
    rank_boundary[s] = rank_in(m, field);
  }
  std::vector<std::size_t> betti(top + 1, 0);
  for (std::size_t s = 0; s <= top; ++s) {
    const std::size_t cycles = by_size[s].size() - rank_boundary[s];
    betti[s] = cycles - rank_boundary[s + 1];
  }
  return betti;
}

std::vector<VertexSet> link_faces(const SimplicialComplex& c, VertexSet face, std::size_t limit) {
  std::vector<VertexSet> link_facets;
  for (VertexSet f : c.facets()) {
    if (face.subset_of(f)) link_facets.push_back(f - face);
  }
  std::vector<VertexSet> out;
  std::vector<std::uint64_t> seen;
  for (VertexSet f : link_facets) {
    std::uint64_t sub = f.bits();
    while (true) {
      seen.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f.bits();
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  if (seen.size() > limit) throw CapacityError("link has more than " + std::to_string(limit) + " faces");
  for (std::uint64_t b : seen) out.emplace_back(b);
  return out;
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& c, Field field, std::size_t face_limit) {
  auto betti = reduced_betti(c.faces(face_limit), field);
  betti.resize(static_cast<std::size_t>(c.dimension() + 2), 0);
  return betti;
}

SimplicialComplex link(const SimplicialComplex& c, VertexSet face) {
  std::vector<VertexSet> link_facets;
  for (VertexSet f : c.facets()) {
    if (face.subset_of(f)) link_facets.push_back(f - face);
  }
  if (link_facets.empty()) throw InputError("not a face of the complex");
  VertexSet used;
  for (VertexSet f : link_facets) used |= f;
  // Renumber onto the used vertices, keeping name order.
  std::vector<Vertex> new_id(c.vertices().size(), 0);
  std::vector<std::string> names;
  for (Vertex v : used) {
    new_id[v] = static_cast<Vertex>(names.size());
    names.push_back(c.vertices()[v]);
  }
  std::vector<VertexSet> facets;
  for (VertexSet f : link_facets) {
    VertexSet g;
    for (Vertex v : f) g.insert(new_id[v]);
    facets.push_back(g);
  }
  // Keep only maximal sets; with a pure complex they already are.
  std::vector<VertexSet> maximal;
  for (VertexSet f : facets) {
    bool dominated = std::any_of(facets.begin(), facets.end(), [f](VertexSet g) { return f != g && f.subset_of(g); });
    if (!dominated && std::find(maximal.begin(), maximal.end(), f) == maximal.end()) maximal.push_back(f);
  }
  return SimplicialComplex(std::move(names), std::move(maximal));
}

HomologyProfile link_profile(const SimplicialComplex& c, VertexSet face, Field field, std::size_t face_limit) {
  HomologyProfile p;
  p.face = c.names_of(face);
  p.field = field;
  const auto faces = link_faces(c, face, face_limit);
  std::size_t top = 0;
  for (VertexSet f : faces) top = std::max(top, f.size());
  p.link_dim = static_cast<int>(top) - 1;
  p.reduced_betti = reduced_betti(faces, field);
  return p;
}

Verdict reisner_cm(const SimplicialComplex& c, Field field, std::size_t face_limit) {
  Verdict v;
  v.route = "reisner";
  v.note = field.name();
  for (VertexSet face : c.faces(face_limit)) {
    HomologyProfile p = link_profile(c, face, field, face_limit);
    // reduced_betti[k] is dimension k - 1.
    for (std::size_t k = 0; k + 1 < p.reduced_betti.size(); ++k) {
      if (p.reduced_betti[k] != 0) {
        v.value = Truth::False;
        v.certificate = HomologyWitness{p.face, p.link_dim, p.reduced_betti, field.name(), static_cast<int>(k) - 1};
        return v;
      }
    }
  }
  v.value = Truth::True;
  return v;
}

}  // namespace cmg
