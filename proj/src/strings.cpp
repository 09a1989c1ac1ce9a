#include "surfcat/strings.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace surfcat {

GentleAlgebra::GentleAlgebra(const Triangulation& t) : qp_(qp_from_triangulation(t)) {
  for (const auto& a : qp_.quiver.arrows) {
    const auto& p = qp_.placement.at(a.id);
    ArrowSides s{t.slot_index(p.source_slot), t.slot_index(p.target_slot)};
    sides_[a.id] = s;
    out_[{a.source, s.source_side}] = a.id;
    in_[{a.target, s.target_side}] = a.id;
  }
}

bool GentleAlgebra::has_vertex(ArcId v) const {
  return std::find(vertices().begin(), vertices().end(), v) != vertices().end();
}

ArcId GentleAlgebra::from(Letter l) const {
  const auto& a = qp_.quiver.arrow(l.arrow);
  return l.inverse ? a.target : a.source;
}

ArcId GentleAlgebra::to(Letter l) const {
  const auto& a = qp_.quiver.arrow(l.arrow);
  return l.inverse ? a.source : a.target;
}

int GentleAlgebra::from_side(Letter l) const {
  const auto& s = sides_.at(l.arrow);
  return l.inverse ? s.target_side : s.source_side;
}

int GentleAlgebra::to_side(Letter l) const {
  const auto& s = sides_.at(l.arrow);
  return l.inverse ? s.source_side : s.target_side;
}

int GentleAlgebra::in_arrow(ArcId v, int s) const {
  auto it = in_.find({v, s});
  return it == in_.end() ? 0 : it->second;
}

int GentleAlgebra::out_arrow(ArcId v, int s) const {
  auto it = out_.find({v, s});
  return it == out_.end() ? 0 : it->second;
}

namespace {

void require_nonzero(const StringWord& w) {
  if (w.is_zero()) throw Error(ErrorCode::ZeroStringStatus, "zero string has no endpoints");
}

void require_arrows(const GentleAlgebra& A, const std::vector<Letter>& ls) {
  for (const auto& l : ls)
    if (!A.has_arrow(l.arrow)) throw Error(ErrorCode::UnknownArrow, "unknown arrow " + std::to_string(l.arrow));
}

// a then b along the walk
bool pair_ok(const GentleAlgebra& A, Letter a, Letter b) {
  if (A.to(a) != A.from(b)) return false;
  if (a.arrow == b.arrow && a.inverse != b.inverse) return false;
  if (!a.inverse && !b.inverse && A.forbids(a.arrow, b.arrow)) return false;
  if (a.inverse && b.inverse && A.forbids(b.arrow, a.arrow)) return false;
  return true;
}

Letter flip_letter(Letter l) { return {l.arrow, !l.inverse}; }

std::optional<Letter> find_extension(const GentleAlgebra& A, const StringWord& w, End at, bool inv) {
  for (const auto& a : A.quiver().arrows) {
    Letter l{a.id, inv};
    if (!extend(A, w, at, l).is_zero()) return l;
  }
  return std::nullopt;
}

StringWord extend_maximally(const GentleAlgebra& A, StringWord w, End at, bool inv) {
  while (auto l = find_extension(A, w, at, inv)) w = extend(A, w, at, *l);
  return w;
}

}  // namespace

ArcId start_vertex(const GentleAlgebra& A, const StringWord& w) {
  require_nonzero(w);
  return w.kind == StringWord::Kind::Trivial ? w.vertex : A.from(w.letters.front());
}

ArcId end_vertex(const GentleAlgebra& A, const StringWord& w) {
  require_nonzero(w);
  return w.kind == StringWord::Kind::Trivial ? w.vertex : A.to(w.letters.back());
}

int start_side(const GentleAlgebra& A, const StringWord& w) {
  require_nonzero(w);
  return w.kind == StringWord::Kind::Trivial ? w.side : 1 - A.from_side(w.letters.front());
}

int end_side(const GentleAlgebra& A, const StringWord& w) {
  require_nonzero(w);
  return w.kind == StringWord::Kind::Trivial ? 1 - w.side : 1 - A.to_side(w.letters.back());
}

std::vector<ArcId> vertex_sequence(const GentleAlgebra& A, const StringWord& w) {
  if (w.is_zero()) return {};
  std::vector<ArcId> out{start_vertex(A, w)};
  for (const auto& l : w.letters) out.push_back(A.to(l));
  return out;
}

std::map<ArcId, int> dimension_vector(const GentleAlgebra& A, const StringWord& w) {
  std::map<ArcId, int> d;
  for (ArcId v : A.vertices()) d[v] = 0;
  for (ArcId v : vertex_sequence(A, w)) ++d[v];
  return d;
}

int dimension(const StringWord& w) {
  switch (w.kind) {
    case StringWord::Kind::Zero: return 0;
    case StringWord::Kind::Trivial: return 1;
    case StringWord::Kind::Word: return w.length() + 1;
  }
  return 0;
}

bool validate_string(const GentleAlgebra& A, const StringWord& w) {
  switch (w.kind) {
    case StringWord::Kind::Zero: return w.letters.empty();
    case StringWord::Kind::Trivial: return w.letters.empty() && A.has_vertex(w.vertex) && (w.side == 0 || w.side == 1);
    case StringWord::Kind::Word: break;
  }
  if (w.letters.empty()) return false;
  require_arrows(A, w.letters);
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (!pair_ok(A, w.letters[i], w.letters[i + 1])) return false;
  return true;
}

bool validate_band(const GentleAlgebra& A, const Band& b) {
  const auto& ls = b.letters;
  const std::size_t m = ls.size();
  if (m == 0) return false;
  require_arrows(A, ls);
  for (std::size_t i = 0; i < m; ++i)
    if (!pair_ok(A, ls[i], ls[(i + 1) % m])) return false;
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < m && periodic; ++i) periodic = ls[i] == ls[(i + p) % m];
    if (periodic) return false;
  }
  return true;
}

StringWord inverse(const StringWord& w) {
  if (w.kind == StringWord::Kind::Trivial) return StringWord::trivial(w.vertex, 1 - w.side);
  if (w.kind == StringWord::Kind::Zero) return w;
  std::vector<Letter> ls;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) ls.push_back(flip_letter(*it));
  return StringWord::word(std::move(ls));
}

Band inverse(const Band& b) {
  Band out;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(flip_letter(*it));
  return out;
}

StringWord canonical_form(const StringWord& w) { return std::min(w, inverse(w)); }

Band canonical_form(const Band& b) {
  Band best = b;
  for (const Band& c : {b, inverse(b)}) {
    Band r = c;
    for (std::size_t k = 0; k < c.letters.size(); ++k) {
      std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
      best = std::min(best, r);
    }
  }
  return best;
}

bool is_direct(const StringWord& w) {
  return std::none_of(w.letters.begin(), w.letters.end(), [](Letter l) { return l.inverse; });
}

bool is_inverse(const StringWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](Letter l) { return l.inverse; });
}

StringWord substring(const GentleAlgebra& A, const StringWord& w, int i, int j) {
  if (j > i) return StringWord::word({w.letters.begin() + i, w.letters.begin() + j});
  ArcId v = vertex_sequence(A, w)[i];
  int side = i > 0 ? A.to_side(w.letters[i - 1]) : start_side(A, w);
  return StringWord::trivial(v, side);
}

StringWord extend(const GentleAlgebra& A, const StringWord& w, End at, Letter l) {
  require_nonzero(w);
  if (!A.has_arrow(l.arrow)) throw Error(ErrorCode::UnknownArrow, "unknown arrow " + std::to_string(l.arrow));
  if (w.kind == StringWord::Kind::Trivial) {
    if (at == End::Start) {
      if (A.to(l) != w.vertex || A.to_side(l) != w.side) return {};
    } else {
      if (A.from(l) != w.vertex || A.from_side(l) != 1 - w.side) return {};
    }
    return StringWord::word({l});
  }
  std::vector<Letter> ls = w.letters;
  if (at == End::Start) {
    if (!pair_ok(A, l, ls.front())) return {};
    ls.insert(ls.begin(), l);
  } else {
    if (!pair_ok(A, ls.back(), l)) return {};
    ls.push_back(l);
  }
  return StringWord::word(std::move(ls));
}

PeakStatus peak_deep_status(const GentleAlgebra& A, const StringWord& w) {
  require_nonzero(w);
  PeakStatus s;
  s.starts_on_peak = !find_extension(A, w, End::Start, false);
  s.ends_on_peak = !find_extension(A, w, End::Finish, true);
  s.starts_in_deep = !find_extension(A, w, End::Start, true);
  s.ends_in_deep = !find_extension(A, w, End::Finish, false);
  return s;
}

HookTriple hook_triple(const GentleAlgebra& A, int arrow) {
  const Arrow& a = A.quiver().arrow(arrow);
  Letter l{arrow, false};
  StringWord n = StringWord::word({l});
  n = extend_maximally(A, n, End::Start, true);
  n = extend_maximally(A, n, End::Finish, true);
  int pos = static_cast<int>(std::find(n.letters.begin(), n.letters.end(), l) - n.letters.begin());
  HookTriple h;
  h.n = n;
  h.v = pos > 0 ? substring(A, n, 0, pos) : StringWord::trivial(a.source, 1 - A.from_side(l));
  h.u = substring(A, n, pos + 1, n.length());
  return h;
}

StringWord add_hook(const GentleAlgebra& A, const StringWord& w, End at) {
  require_nonzero(w);
  if (at == End::Start) {
    auto l = find_extension(A, w, End::Start, false);
    if (!l) throw Error(ErrorCode::OnPeak, "string starts on a peak");
    return extend_maximally(A, extend(A, w, at, *l), at, true);
  }
  auto l = find_extension(A, w, End::Finish, true);
  if (!l) throw Error(ErrorCode::OnPeak, "string ends on a peak");
  return extend_maximally(A, extend(A, w, at, *l), at, false);
}

StringWord delete_cohook(const GentleAlgebra& A, const StringWord& w, End at) {
  auto st = peak_deep_status(A, w);
  const int m = w.length();
  if (at == End::Start) {
    if (!st.starts_on_peak) throw Error(ErrorCode::NotOnPeak, "string does not start on a peak");
    if (is_direct(w)) return StringWord::zero();
    int k = 0;
    while (!w.letters[k].inverse) ++k;
    return substring(A, w, k + 1, m);
  }
  if (!st.ends_on_peak) throw Error(ErrorCode::NotOnPeak, "string does not end on a peak");
  if (is_inverse(w)) return StringWord::zero();
  int k = m - 1;
  while (w.letters[k].inverse) --k;
  return substring(A, w, 0, k);
}

namespace {

StringWord end_move(const GentleAlgebra& A, const StringWord& w, End at) {
  auto st = peak_deep_status(A, w);
  bool peak = at == End::Start ? st.starts_on_peak : st.ends_on_peak;
  return peak ? delete_cohook(A, w, at) : add_hook(A, w, at);
}

}  // namespace

ARSequence ar_sequence(const GentleAlgebra& A, const StringWord& w) {
  require_nonzero(w);
  if (is_injective_string(A, w)) throw Error(ErrorCode::InjectiveModule, "M(w) is injective");
  StringWord s = end_move(A, w, End::Start);
  StringWord e = end_move(A, w, End::Finish);
  ARSequence r;
  r.left = w;
  for (const auto& x : {s, e})
    if (!x.is_zero()) r.middle.push_back(x);
  r.right = !s.is_zero() ? end_move(A, s, End::Finish) : end_move(A, e, End::Start);
  return r;
}

StringWord projective_string(const GentleAlgebra& A, ArcId v) {
  StringWord w = StringWord::trivial(v, 0);
  w = extend_maximally(A, w, End::Start, true);
  return extend_maximally(A, w, End::Finish, false);
}

StringWord injective_string(const GentleAlgebra& A, ArcId v) {
  StringWord w = StringWord::trivial(v, 0);
  w = extend_maximally(A, w, End::Start, false);
  return extend_maximally(A, w, End::Finish, true);
}

bool is_projective_string(const GentleAlgebra& A, const StringWord& w) {
  if (w.is_zero()) return false;
  auto c = canonical_form(w);
  for (ArcId v : A.vertices())
    if (canonical_form(projective_string(A, v)) == c) return true;
  return false;
}

bool is_injective_string(const GentleAlgebra& A, const StringWord& w) {
  if (w.is_zero()) return false;
  auto c = canonical_form(w);
  for (ArcId v : A.vertices())
    if (canonical_form(injective_string(A, v)) == c) return true;
  return false;
}

std::vector<StringWord> enumerate_strings(const GentleAlgebra& A, int max_len) {
  std::set<StringWord> found;
  std::vector<StringWord> stack;
  for (ArcId v : A.vertices())
    for (int s : {0, 1}) stack.push_back(StringWord::trivial(v, s));
  while (!stack.empty()) {
    StringWord w = stack.back();
    stack.pop_back();
    found.insert(canonical_form(w));
    if (w.length() >= max_len) continue;
    for (const auto& a : A.quiver().arrows)
      for (bool inv : {false, true}) {
        auto x = extend(A, w, End::Finish, Letter{a.id, inv});
        if (!x.is_zero()) stack.push_back(x);
      }
  }
  return {found.begin(), found.end()};
}

std::vector<Band> enumerate_bands(const GentleAlgebra& A, int max_len) {
  std::set<Band> found;
  for (const auto& w : enumerate_strings(A, max_len)) {
    for (const auto& x : {w, inverse(w)}) {
      if (x.kind != StringWord::Kind::Word) continue;
      Band b{x.letters};
      if (validate_band(A, b)) found.insert(canonical_form(b));
    }
  }
  return {found.begin(), found.end()};
}

namespace {

std::vector<Letter> parse_letters(const std::string& body) {
  std::vector<Letter> ls;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v == 0) throw std::invalid_argument(item);
      ls.push_back({std::abs(v), v < 0});
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedSpec, "bad letter '" + item + "'");
    }
  }
  if (ls.empty()) throw Error(ErrorCode::MalformedSpec, "empty word");
  return ls;
}

std::string letters_text(const std::vector<Letter>& ls) {
  std::string s;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ",";
    s += (ls[i].inverse ? "-" : "") + std::to_string(ls[i].arrow);
  }
  return s;
}

}  // namespace

StringWord parse_string(const std::string& text) {
  if (text == "zero") return StringWord::zero();
  if (text.rfind("triv:", 0) == 0) {
    std::string body = text.substr(5);
    int side = 0;
    if (auto slash = body.find('/'); slash != std::string::npos) {
      std::string s = body.substr(slash + 1);
      if (s != "0" && s != "1") throw Error(ErrorCode::MalformedSpec, "bad side in '" + text + "'");
      side = s == "1";
      body = body.substr(0, slash);
    }
    try {
      std::size_t used = 0;
      int v = std::stoi(body, &used);
      if (used != body.size()) throw std::invalid_argument(body);
      return StringWord::trivial(v, side);
    } catch (const std::exception&) {
      throw Error(ErrorCode::MalformedSpec, "bad vertex in '" + text + "'");
    }
  }
  if (text.rfind("w:", 0) == 0) return StringWord::word(parse_letters(text.substr(2)));
  throw Error(ErrorCode::MalformedSpec, "unrecognised string literal '" + text + "'");
}

Band parse_band_letters(const std::string& text) {
  std::string body = text.rfind("band:", 0) == 0 ? text.substr(5) : text;
  return Band{parse_letters(body)};
}

std::string format(const StringWord& w) {
  switch (w.kind) {
    case StringWord::Kind::Zero: return "zero";
    case StringWord::Kind::Trivial:
      return "triv:" + std::to_string(w.vertex) + (w.side ? "/1" : "");
    case StringWord::Kind::Word: return "w:" + letters_text(w.letters);
  }
  return "zero";
}

std::string format(const Band& b) { return "band:" + letters_text(b.letters); }

}  // namespace surfcat
