#include "surfcat/objects.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace surfcat {

ArcId ObjectC::arc() const {
  if (kind != Kind::Arc) throw std::logic_error("not an arc object");
  return model->tri.arc_at(side_of(curve));
}

StringWord ObjectC::word() const {
  if (kind != Kind::String) throw std::logic_error("not a string object");
  return word_of_curve(*model, curve);
}

int ObjectC::start_point() const { return surfcat::start_point(model->tri, curve); }
int ObjectC::end_point() const { return surfcat::end_point(model->tri, curve); }

ObjectC zero_object(ModelPtr m) {
  ObjectC x;
  x.model = std::move(m);
  return x;
}

ObjectC arc_object(ModelPtr m, ArcId id) {
  const auto& t = m->tri;
  if (!t.has_arc(id) || t.is_boundary(id)) throw Error(ErrorCode::UnknownArc, "no internal arc " + std::to_string(id));
  ObjectC x;
  x.kind = ObjectC::Kind::Arc;
  x.curve = side_curve(t.slots(id)[0]);
  x.model = std::move(m);
  return x;
}

ObjectC string_object(ModelPtr m, const StringWord& w) {
  if (w.is_zero()) return zero_object(std::move(m));
  if (!validate_string(m->alg, w)) throw Error(ErrorCode::InvalidString, "not a string: " + format(w));
  ObjectC x;
  x.kind = ObjectC::Kind::String;
  x.curve = curve_of_word(*m, w);
  x.model = std::move(m);
  return x;
}

ObjectC band_object(ModelPtr m, const Band& b, int n, const Rational& lambda) {
  if (lambda == 0) throw Error(ErrorCode::ZeroParameter, "band parameter must be nonzero");
  if (n < 1) throw Error(ErrorCode::MalformedSpec, "band multiplicity must be at least 1");
  if (!validate_band(m->alg, b)) throw Error(ErrorCode::InvalidString, "not a band: " + format(b));
  ObjectC x;
  x.kind = ObjectC::Kind::Band;
  x.band = b;
  x.n = n;
  x.lambda = lambda;
  x.model = std::move(m);
  return x;
}

ObjectC object_of_curve(ModelPtr m, const Curve& c0) {
  const Curve c = reduce(m->tri, c0);
  if (is_contractible(c)) return zero_object(std::move(m));
  ObjectC x;
  if (c.crossings.empty()) {
    if (m->tri.is_boundary(m->tri.arc_at(side_of(c)))) return zero_object(std::move(m));
    x.kind = ObjectC::Kind::Arc;
  } else {
    x.kind = ObjectC::Kind::String;
  }
  x.curve = c;
  x.model = std::move(m);
  return x;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedSpec, "bad " + what + " '" + s + "'");
  }
}

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(-?\d+(/\d+)?)");
  if (!std::regex_match(s, re)) throw Error(ErrorCode::MalformedSpec, "bad parameter '" + s + "'");
  const auto slash = s.find('/');
  if (slash != std::string::npos && std::stoll(s.substr(slash + 1)) == 0)
    throw Error(ErrorCode::MalformedSpec, "zero denominator in '" + s + "'");
  return Rational(s);
}

std::string format_rational(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

ObjectC parse_band_object(const ModelPtr& m, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) parts.push_back(trim(item));
  const Band b = parse_band_letters(parts.at(0));
  int n = 1;
  Rational lambda(1);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].rfind("n=", 0) == 0)
      n = parse_int(parts[i].substr(2), "multiplicity");
    else if (parts[i].rfind("l=", 0) == 0)
      lambda = parse_rational(parts[i].substr(2));
    else
      throw Error(ErrorCode::MalformedSpec, "unknown band field '" + parts[i] + "'");
  }
  return band_object(m, b, n, lambda);
}

}  // namespace

ObjectC parse_object(ModelPtr m, const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "zero") return zero_object(std::move(m));
  if (text.rfind("arc:", 0) == 0) return arc_object(std::move(m), parse_int(text.substr(4), "arc id"));
  if (text.rfind("band:", 0) == 0) return parse_band_object(m, text);
  std::string body = text;
  std::optional<std::pair<int, int>> ends;
  if (const auto at = text.find('@'); at != std::string::npos) {
    body = text.substr(0, at);
    static const std::regex re(R"(\(\s*m(\d+)\s*,\s*m(\d+)\s*\))");
    std::smatch mt;
    const std::string tail = text.substr(at + 1);
    if (!std::regex_match(tail, mt, re)) throw Error(ErrorCode::MalformedSpec, "bad endpoints '" + tail + "'");
    ends = std::make_pair(std::stoi(mt[1]), std::stoi(mt[2]));
  }
  const StringWord w = parse_string(body);
  if (w.is_zero()) throw Error(ErrorCode::MalformedSpec, "endpoints on the zero object");
  ObjectC x = string_object(m, w);
  if (ends && (ends->first != x.start_point() || ends->second != x.end_point()))
    throw Error(ErrorCode::MalformedSpec, "endpoints do not match the word: expected (m" +
                                              std::to_string(x.start_point()) + ",m" + std::to_string(x.end_point()) +
                                              ")");
  return x;
}

std::string format(const ObjectC& x) {
  switch (x.kind) {
    case ObjectC::Kind::Zero:
      return "zero";
    case ObjectC::Kind::Arc:
      return "arc:" + std::to_string(x.arc());
    case ObjectC::Kind::String:
      return format(x.word()) + "@(m" + std::to_string(x.start_point()) + ",m" + std::to_string(x.end_point()) + ")";
    case ObjectC::Kind::Band:
      return format(x.band) + ";n=" + std::to_string(x.n) + ";l=" + format_rational(x.lambda);
  }
  return "";
}

ObjectC pivot_start(const ObjectC& x) {
  if (x.kind == ObjectC::Kind::Zero || x.kind == ObjectC::Kind::Band) return x;
  return object_of_curve(x.model, pivot_start(x.model->tri, x.curve));
}

ObjectC pivot_end(const ObjectC& x) {
  if (x.kind == ObjectC::Kind::Zero || x.kind == ObjectC::Kind::Band) return x;
  return object_of_curve(x.model, pivot_end(x.model->tri, x.curve));
}

ObjectC shift(const ObjectC& x, int k) {
  if (x.kind == ObjectC::Kind::Zero || x.kind == ObjectC::Kind::Band) return x;
  const auto& t = x.model->tri;
  Curve c = x.curve;
  for (; k < 0; ++k) c = pivot_start(t, pivot_end(t, c));
  for (; k > 0; --k) c = unpivot_start(t, unpivot_end(t, c));
  return object_of_curve(x.model, c);
}

ARTriangle ar_triangle(const ObjectC& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroObject, "no AR-triangle starts in the zero object");
  ARTriangle tr{x, {}, x};
  if (x.kind == ObjectC::Kind::Band) {
    ObjectC up = x, down = x;
    up.n = x.n + 1;
    down.n = x.n - 1;
    tr.middle.push_back(up);
    if (down.n > 0) tr.middle.push_back(down);
    return tr;
  }
  for (const ObjectC& y : {pivot_start(x), pivot_end(x)})
    if (!y.is_zero()) tr.middle.push_back(y);
  tr.target = shift(x, -1);
  return tr;
}

Curve boundary_curve(const Triangulation& t, ArcId boundary_arc) {
  if (!t.has_arc(boundary_arc) || !t.is_boundary(boundary_arc))
    throw Error(ErrorCode::UnknownArc, "no boundary arc " + std::to_string(boundary_arc));
  return reverse(t, side_curve(t.slots(boundary_arc)[0]));
}

Component component_classify(const ObjectC& x) {
  Component comp;
  if (x.kind == ObjectC::Kind::Band) {
    comp.kind = Component::Kind::HomogeneousTube;
    return comp;
  }
  if (x.is_zero()) throw Error(ErrorCode::ZeroObject, "the zero object lies in no component");
  const auto& t = x.model->tri;
  const int len = x.kind == ObjectC::Kind::String ? x.word().length() : 0;
  const int bound = (len + 1) * (t.internal_arc_count() + 1);
  const auto& comps = t.boundary_components();
  for (std::size_t b = 0; b < comps.size(); ++b) {
    for (int mp : comps[b]) {
      const ArcId seg = t.arc_at(t.boundary_out(mp));
      Curve c = boundary_curve(t, seg);
      for (int j = 1; j <= bound; ++j) {
        c = pivot_end(t, c);
        if (object_equal(object_of_curve(x.model, c), x)) {
          comp.kind = Component::Kind::BoundaryTube;
          comp.boundary = static_cast<int>(b);
          comp.rank = static_cast<int>(comps[b].size());
          comp.segment = seg;
          comp.level = j;
          return comp;
        }
      }
    }
  }
  return comp;
}

namespace {

std::string rotation_key(const Band& b) {
  const Band c = canonical_form(b);
  return format(c);
}

// Whether the canonical form of b is reached without inverting it.
bool canonical_keeps_direction(const Band& b) {
  const Band c = canonical_form(b);
  const auto& ls = b.letters;
  for (std::size_t r = 0; r < ls.size(); ++r) {
    std::vector<Letter> rot(ls.begin() + static_cast<long>(r), ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(r));
    if (rot == c.letters) return true;
  }
  return false;
}

void require_same_model(const ObjectC& x, const ObjectC& y) {
  if (x.model == y.model) return;
  if (!x.model || !y.model || to_json(x.model->tri) != to_json(y.model->tri))
    throw Error(ErrorCode::MixedTriangulations, "objects live on different triangulations");
}

}  // namespace

std::string object_key(const ObjectC& x) {
  switch (x.kind) {
    case ObjectC::Kind::Zero:
      return "zero";
    case ObjectC::Kind::Arc:
      return "arc:" + std::to_string(x.arc());
    case ObjectC::Kind::String:
      return format(canonical_form(x.word()));
    case ObjectC::Kind::Band: {
      const Rational l = canonical_keeps_direction(x.band) ? x.lambda : Rational(1) / x.lambda;
      return rotation_key(x.band) + ";n=" + std::to_string(x.n) + ";l=" + format_rational(l);
    }
  }
  return "";
}

bool object_equal(const ObjectC& x, const ObjectC& y) {
  require_same_model(x, y);
  return object_key(x) == object_key(y);
}

Representation<Rational> module_of(const ObjectC& x) {
  const auto& A = x.model->alg;
  switch (x.kind) {
    case ObjectC::Kind::String:
      return string_module<Rational>(A, x.word());
    case ObjectC::Kind::Band:
      return band_module<Rational>(A, x.band, x.n, x.lambda);
    default:
      return detail::zero_rep<Rational>(A, std::vector<int>(A.vertices().size(), 0));
  }
}

std::vector<ObjectC> enumerate_objects(ModelPtr m, int max_len) {
  std::vector<ObjectC> out;
  for (ArcId a : m->tri.internal_arcs()) out.push_back(arc_object(m, a));
  for (const auto& w : enumerate_strings(m->alg, max_len)) out.push_back(string_object(m, w));
  return out;
}

ObjectC transport_object(ModelPtr after, const Triangulation& before, const FlipResult& fr, const ObjectC& x) {
  switch (x.kind) {
    case ObjectC::Kind::Zero:
      return zero_object(std::move(after));
    case ObjectC::Kind::Band: {
      const auto closed = transport(before, fr, curve_of_band(*x.model, x.band));
      return band_object(after, band_of_curve(*after, closed), x.n, x.lambda);
    }
    default:
      return object_of_curve(std::move(after), transport(before, fr, x.curve));
  }
}

}  // namespace surfcat
