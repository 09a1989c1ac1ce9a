#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "surfcat/qp.hpp"

namespace surfcat {

struct Letter {
  int arrow = 0;
  bool inverse = false;
  auto operator<=>(const Letter&) const = default;
};

// Letters are stored in walk order: letters[0] leaves the start vertex.
// In the right-to-left notation w = a_n ... a_1 this is a_1 first.
//
// A trivial string remembers which of the two triangles along its arc it
// starts in (`side`, an index into Triangulation::slots); a vertex can have
// two incoming arrows on different sides, so the bare vertex is not enough.
struct StringWord {
  enum class Kind { Zero, Trivial, Word };
  Kind kind = Kind::Zero;
  ArcId vertex = 0;
  int side = 0;
  std::vector<Letter> letters;

  static StringWord zero() { return {}; }
  static StringWord trivial(ArcId v, int side = 0) { return {Kind::Trivial, v, side, {}}; }
  static StringWord word(std::vector<Letter> letters) { return {Kind::Word, 0, 0, std::move(letters)}; }

  bool is_zero() const { return kind == Kind::Zero; }
  int length() const { return static_cast<int>(letters.size()); }
  auto operator<=>(const StringWord&) const = default;
};

struct Band {
  std::vector<Letter> letters;
  auto operator<=>(const Band&) const = default;
};

class GentleAlgebra {
 public:
  explicit GentleAlgebra(const Triangulation& t);

  const QuiverWithPotential& qp() const { return qp_; }
  const Quiver& quiver() const { return qp_.quiver; }
  const std::vector<ArcId>& vertices() const { return qp_.quiver.vertices; }
  bool has_vertex(ArcId v) const;
  bool has_arrow(int id) const { return qp_.quiver.has_arrow(id); }

  ArcId from(Letter l) const;
  ArcId to(Letter l) const;
  // Side of the letter's triangle at its first / last vertex.
  int from_side(Letter l) const;
  int to_side(Letter l) const;
  // Arrow ending (resp. starting) at v inside the triangle on side s of v, or 0.
  int in_arrow(ArcId v, int s) const;
  int out_arrow(ArcId v, int s) const;
  bool forbids(int first, int second) const { return qp_.relations.forbids(first, second); }

 private:
  struct ArrowSides {
    int source_side = 0;
    int target_side = 0;
  };
  QuiverWithPotential qp_;
  std::map<int, ArrowSides> sides_;
  std::map<std::pair<ArcId, int>, int> in_, out_;
};

// Walk-level queries (w must not be Zero).
ArcId start_vertex(const GentleAlgebra& A, const StringWord& w);
ArcId end_vertex(const GentleAlgebra& A, const StringWord& w);
int start_side(const GentleAlgebra& A, const StringWord& w);
int end_side(const GentleAlgebra& A, const StringWord& w);
std::vector<ArcId> vertex_sequence(const GentleAlgebra& A, const StringWord& w);
std::map<ArcId, int> dimension_vector(const GentleAlgebra& A, const StringWord& w);
int dimension(const StringWord& w);

// Throws UnknownArrow for letters outside the quiver.
bool validate_string(const GentleAlgebra& A, const StringWord& w);
bool validate_band(const GentleAlgebra& A, const Band& b);

StringWord inverse(const StringWord& w);
Band inverse(const Band& b);
StringWord canonical_form(const StringWord& w);
Band canonical_form(const Band& b);
bool is_direct(const StringWord& w);
bool is_inverse(const StringWord& w);
// Letters [i, j) as a string; an empty range gives the trivial string at that position.
StringWord substring(const GentleAlgebra& A, const StringWord& w, int i, int j);

enum class End { Start, Finish };

struct PeakStatus {
  bool starts_on_peak = false;
  bool ends_on_peak = false;
  bool starts_in_deep = false;
  bool ends_in_deep = false;
  auto operator<=>(const PeakStatus&) const = default;
};

PeakStatus peak_deep_status(const GentleAlgebra& A, const StringWord& w);

// Extend by one letter if the result is a string; Zero otherwise.
StringWord extend(const GentleAlgebra& A, const StringWord& w, End at, Letter l);

struct HookTriple {
  StringWord u;
  StringWord v;
  StringWord n;  // walk order: v, the arrow, then u
};

HookTriple hook_triple(const GentleAlgebra& A, int arrow);
StringWord add_hook(const GentleAlgebra& A, const StringWord& w, End at);
StringWord delete_cohook(const GentleAlgebra& A, const StringWord& w, End at);

struct ARSequence {
  StringWord left;
  std::vector<StringWord> middle;
  StringWord right;
};

ARSequence ar_sequence(const GentleAlgebra& A, const StringWord& w);

StringWord projective_string(const GentleAlgebra& A, ArcId v);
StringWord injective_string(const GentleAlgebra& A, ArcId v);
bool is_projective_string(const GentleAlgebra& A, const StringWord& w);
bool is_injective_string(const GentleAlgebra& A, const StringWord& w);

// All strings with at most max_len letters, canonical and deduplicated, Zero excluded.
std::vector<StringWord> enumerate_strings(const GentleAlgebra& A, int max_len);
// Primitive cyclic words with at most max_len letters, canonical.
std::vector<Band> enumerate_bands(const GentleAlgebra& A, int max_len);

// Literals: `zero`, `triv:v` or `triv:v/1`, `w:4,-7,2` (walk order, negative = inverse letter).
StringWord parse_string(const std::string& text);
Band parse_band_letters(const std::string& text);
std::string format(const StringWord& w);
std::string format(const Band& b);

}  // namespace surfcat
