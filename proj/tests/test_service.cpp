#include <doctest.h>

#include <thread>

#include "surfcat/service.hpp"
#include "test_support.hpp"

#include <httplib.h>

using namespace surfcat;

namespace {

// Session served on an ephemeral port for the lifetime of the fixture.
struct Running {
  Session session;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit Running(Triangulation t) : session(std::move(t)) {
    mount(server, session);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~Running() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

Json body(const httplib::Result& r) {
  REQUIRE(r);
  return Json::parse(r->body);
}

std::string flip_body(int arc) { return Json{{"arc", arc}}.dump(); }

}  // namespace

TEST_CASE("service quiver and flips on the annulus example") {
  Running run(load_triangulation(testing::fixture("annulus_example.json")));
  auto cli = run.client();
  const auto q = body(cli.Get("/api/quiver"));
  CHECK(q["vertices"].size() == 5);
  CHECK(q["potential_cycles"].size() == 1);

  const auto initial = cli.Get("/api/state");
  REQUIRE(initial);
  CHECK(initial->status == 200);

  auto r = cli.Post("/api/flip", flip_body(5), "application/json");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(body(r)["history"] == Json::array({5}));
  CHECK(body(cli.Get("/api/quiver"))["potential_cycles"].empty());

  r = cli.Post("/api/flip", flip_body(5), "application/json");
  const auto twice = body(r);
  CHECK(twice["history"].size() == 2);
  // same triangulation up to triangle order and arc directions
  CHECK(twice["key"] == Json::parse(initial->body)["key"]);
  CHECK(testing::same_gluing(triangulation_from_json(twice["triangulation"].dump()),
                             load_triangulation(testing::fixture("annulus_example.json"))));

  const auto before_undo = cli.Get("/api/state")->body;
  cli.Post("/api/flip", flip_body(2), "application/json");
  CHECK(cli.Post("/api/undo")->body == before_undo);
  CHECK(cli.Post("/api/reset")->body == initial->body);
}

TEST_CASE("service errors") {
  Running run(load_triangulation(testing::fixture("annulus_example.json")));
  auto cli = run.client();
  const auto initial = cli.Get("/api/state")->body;
  auto r = cli.Post("/api/flip", flip_body(6), "application/json");
  REQUIRE(r);
  CHECK(r->status == 409);
  CHECK(body(r)["error"] == "BoundaryArcFlip");
  r = cli.Post("/api/flip", flip_body(99), "application/json");
  CHECK(r->status == 404);
  r = cli.Post("/api/flip", "{\"arc\":\"x\"}", "application/json");
  CHECK(r->status == 400);
  r = cli.Post("/api/flip", "not json", "application/json");
  CHECK(r->status == 400);
  CHECK(cli.Get("/api/state")->body == initial);

  r = cli.Get("/api/object/ar?spec=" + httplib::detail::encode_url("w:1,,2"));
  REQUIRE(r);
  CHECK(r->status == 400);
  r = cli.Get("/api/object/ar?spec=" + httplib::detail::encode_url("w:77"));
  CHECK(r->status == 404);
  r = cli.Get("/api/object/ar");
  CHECK(r->status == 400);
}

TEST_CASE("service AR triangles and hom") {
  Running run(canonical_annulus(2, 3));
  auto cli = run.client();
  const auto m = make_model(canonical_annulus(2, 3));
  const Band b = enumerate_bands(m->alg, 10).front();
  const std::string spec = format(b) + ";n=1;l=1";
  const auto tr = body(cli.Get("/api/object/ar?spec=" + httplib::detail::encode_url(spec)));
  REQUIRE(tr["middle"].size() == 1);
  CHECK(tr["middle"][0]["n"] == 2);
  CHECK(tr["target"]["n"] == 1);
  CHECK(tr["component"]["kind"] == "homogeneous_tube");

  const ArcId a = m->tri.internal_arcs().front();
  const auto h = body(cli.Get("/api/hom?from=arc:" + std::to_string(a) + "&to=arc:" + std::to_string(a)));
  CHECK(h["dim"] == 1);
}

TEST_CASE("replaying history reproduces the state") {
  const auto base = canonical_annulus(2, 3);
  Session s(base);
  std::vector<ArcId> flips;
  for (int k = 0; k < 12; ++k) {
    const auto arcs = base.internal_arcs();
    flips.push_back(arcs[(k * 7) % arcs.size()]);
    s.flip(flips.back());
  }
  Session fresh(base);
  const Json st = s.state();
  for (ArcId a : st["history"]) fresh.flip(a);
  CHECK(fresh.state().dump() == s.state().dump());
  s.undo();
  Session shorter(base);
  for (std::size_t i = 0; i + 1 < flips.size(); ++i) shorter.flip(flips[i]);
  CHECK(shorter.state().dump() == s.state().dump());
}
