#include "surfcat/service.hpp"

// after Eigen: resolv.h defines _res
#include <httplib.h>

namespace surfcat {

Session::Session(Triangulation base) : base_(base), current_(std::move(base)) {}

ModelPtr Session::current_model() const { return make_model(current_); }

Json Session::state() const {
  std::lock_guard lock(mu_);
  return state_locked();
}

Json Session::state_locked() const {
  Json j;
  j["triangulation"] = to_json_value(current_);
  j["key"] = triangulation_key(current_);
  j["history"] = history_;
  j["invariants"] = to_json_value(current_.invariants());
  return j;
}

Json Session::flip(ArcId arc) {
  std::lock_guard lock(mu_);
  current_ = surfcat::flip(current_, arc, arc).tri;
  history_.push_back(arc);
  return state_locked();
}

Json Session::undo() {
  std::lock_guard lock(mu_);
  if (!history_.empty()) {
    history_.pop_back();
    Triangulation t = base_;
    for (ArcId a : history_) t = surfcat::flip(t, a, a).tri;
    current_ = std::move(t);
  }
  return state_locked();
}

Json Session::reset() {
  std::lock_guard lock(mu_);
  current_ = base_;
  history_.clear();
  return state_locked();
}

Json Session::quiver() const {
  std::lock_guard lock(mu_);
  return to_json_value(qp_from_triangulation(current_));
}

Json Session::object_ar(const std::string& spec) const {
  ModelPtr m;
  {
    std::lock_guard lock(mu_);
    m = current_model();
  }
  const ObjectC x = parse_object(m, spec);
  Json j = to_json_value(ar_triangle(x));
  j["component"] = to_json_value(component_classify(x));
  return j;
}

Json Session::hom(const std::string& from, const std::string& to) const {
  ModelPtr m;
  {
    std::lock_guard lock(mu_);
    m = current_model();
  }
  const ObjectC x = parse_object(m, from), y = parse_object(m, to);
  Json j;
  j["dim"] = hom_c_dim(x, y);
  if (x.kind == ObjectC::Kind::String && y.kind == ObjectC::Kind::String)
    j["hom_j"] = hom_j_dim(m->alg, x.word(), y.word());
  return j;
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::BoundaryArcFlip:
      return 409;
    case ErrorCode::UnknownArc:
    case ErrorCode::UnknownArrow:
    case ErrorCode::InvalidString:
    case ErrorCode::ZeroObject:
      return 404;
    default:
      return 400;
  }
}

namespace {

void reply(httplib::Response& res, const Json& j, int status = 200) {
  res.status = status;
  res.set_content(j.dump(), "application/json");
}

template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      reply(res, f(req));
    } catch (const Error& e) {
      reply(res, error_json(e), http_status(e.code()));
    } catch (const std::exception& e) {
      reply(res, Json{{"error", "MalformedInput"}, {"detail", e.what()}}, 400);
    }
  };
}

std::string required_param(const httplib::Request& req, const std::string& name) {
  if (!req.has_param(name)) throw Error(ErrorCode::MalformedSpec, "missing parameter " + name);
  return req.get_param_value(name);
}

}  // namespace

void mount(httplib::Server& server, Session& s) {
  server.Get("/api/state", guarded([&](const httplib::Request&) { return s.state(); }));
  server.Post("/api/flip", guarded([&](const httplib::Request& req) {
                const Json body = Json::parse(req.body);
                if (!body.contains("arc") || !body["arc"].is_number_integer())
                  throw Error(ErrorCode::MalformedInput, "body needs an integer \"arc\"");
                return s.flip(body["arc"].get<int>());
              }));
  server.Post("/api/undo", guarded([&](const httplib::Request&) { return s.undo(); }));
  server.Post("/api/reset", guarded([&](const httplib::Request&) { return s.reset(); }));
  server.Get("/api/quiver", guarded([&](const httplib::Request&) { return s.quiver(); }));
  server.Get("/api/object/ar",
             guarded([&](const httplib::Request& req) { return s.object_ar(required_param(req, "spec")); }));
  server.Get("/api/hom", guarded([&](const httplib::Request& req) {
               return s.hom(required_param(req, "from"), required_param(req, "to"));
             }));
}

}  // namespace surfcat
