#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "surfcat/service.hpp"

#include <httplib.h>

using namespace surfcat;

namespace {

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json objects_json(const std::vector<ObjectC>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json_value(x));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulated surfaces, gentle algebras and their cluster categories"};
  app.require_subcommand(1);

  std::string file, file2, from, to, spec, kind = "polygon";
  std::vector<std::string> specs;
  int arc = 0, max_len = 4, port = 8080, c = 6, t1 = 2, t2 = 3;
  bool dot = false;

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("triangulation", file, "triangulation JSON file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto* validate = with_file(app.add_subcommand("validate", "check a triangulation and count internal arcs"));
  auto* qp = with_file(app.add_subcommand("qp", "quiver with potential"));
  qp->add_flag("--dot", dot, "Graphviz output");
  auto* flip_cmd = with_file(app.add_subcommand("flip", "flip an internal arc"));
  flip_cmd->add_option("--arc", arc)->required();
  auto* mutate = with_file(app.add_subcommand("mutate", "exchange triangles of the summand at an arc"));
  mutate->add_option("--arc", arc)->required();
  auto* ar = with_file(app.add_subcommand("ar", "Auslander-Reiten triangle of an object"));
  ar->add_option("--object", spec)->required();
  auto* hom = with_file(app.add_subcommand("hom", "dimension of Hom in the cluster category"));
  auto* ext = with_file(app.add_subcommand("ext", "dimension of Ext^1 in the cluster category"));
  auto* smooth = with_file(app.add_subcommand("smooth", "witness for a crossing of two objects"));
  for (auto* sub : {hom, ext, smooth}) {
    sub->add_option("--from", from)->required();
    sub->add_option("--to", to)->required();
  }
  auto* rigid = with_file(app.add_subcommand("rigid", "is the object rigid"));
  rigid->add_option("--object", spec)->required();
  auto* resolve = with_file(app.add_subcommand("resolve-self", "witness for a self-crossing"));
  resolve->add_option("--object", spec)->required();
  auto* enumerate = with_file(app.add_subcommand("enumerate", "objects up to a word length"));
  enumerate->add_option("--max-len", max_len)->check(CLI::NonNegativeNumber);
  auto* path = with_file(app.add_subcommand("flip-path", "shortest flip sequence to another triangulation"));
  path->add_option("--to", file2)->required()->check(CLI::ExistingFile);
  auto* ct = with_file(app.add_subcommand("ct-check", "is a set of objects cluster tilting"));
  ct->add_option("--object", specs)->required();
  auto* serve = with_file(app.add_subcommand("serve", "HTTP session on a triangulation"));
  serve->add_option("--port", port);
  auto* generate = app.add_subcommand("generate", "standard triangulations");
  generate->add_option("kind", kind)->check(CLI::IsMember({"polygon", "annulus"}));
  generate->add_option("--c", c, "polygon vertices");
  generate->add_option("--t1", t1, "marked points on the outer boundary");
  generate->add_option("--t2", t2, "marked points on the inner boundary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) {
      emit(to_json_value(kind == "polygon" ? canonical_polygon(c) : canonical_annulus(t1, t2)));
      return 0;
    }
    const Triangulation t = load_triangulation(file);
    const ModelPtr m = make_model(t);
    if (*validate) {
      emit(Json{{"ok", true}, {"internal_arcs", t.internal_arc_count()}});
    } else if (*qp) {
      const auto q = qp_from_triangulation(t);
      if (dot)
        std::cout << to_dot(q);
      else
        emit(to_json_value(q));
    } else if (*flip_cmd) {
      emit(to_json_value(flip(t, arc, arc).tri));
    } else if (*mutate) {
      const auto T = cluster_of(m);
      std::size_t i = 0;
      while (i < T.summands.size() && T.summands[i].arc() != arc) ++i;
      if (i == T.summands.size()) throw Error(ErrorCode::UnknownArc, "no internal arc " + std::to_string(arc));
      emit(to_json_value(exchange_triangles(T, i)));
    } else if (*ar) {
      const auto x = parse_object(m, spec);
      Json j = to_json_value(ar_triangle(x));
      j["component"] = to_json_value(component_classify(x));
      emit(j);
    } else if (*hom) {
      emit(Json{{"dim", hom_c_dim(parse_object(m, from), parse_object(m, to))}});
    } else if (*ext) {
      emit(Json{{"dim", ext1_c_dim(parse_object(m, from), parse_object(m, to))}});
    } else if (*rigid) {
      const auto x = parse_object(m, spec);
      emit(Json{{"rigid", is_rigid(x)}, {"ext", ext1_c_dim(x, x)}});
    } else if (*smooth) {
      emit(to_json_value(smooth_crossing(parse_object(m, from), parse_object(m, to))));
    } else if (*resolve) {
      emit(to_json_value(resolve_self_crossing(parse_object(m, spec))));
    } else if (*enumerate) {
      Json bands = Json::array();
      for (const auto& b : enumerate_bands(m->alg, max_len)) bands.push_back(to_json_value(b));
      emit(Json{{"objects", objects_json(enumerate_objects(m, max_len))}, {"bands", bands}});
    } else if (*path) {
      const auto p = flip_path(t, load_triangulation(file2));
      emit(Json{{"path", p}, {"length", p.size()}});
    } else if (*ct) {
      std::vector<ObjectC> objs;
      for (const auto& s : specs) objs.push_back(parse_object(m, s));
      emit(to_json_value(cluster_tilting_check(m, objs)));
    } else if (*serve) {
      if (const char* env = std::getenv("SURFCAT_PORT")) port = std::atoi(env);
      Session session(t);
      httplib::Server server;
      mount(server, session);
      std::cerr << "listening on 127.0.0.1:" << port << "\n";
      if (!server.listen("127.0.0.1", port)) {
        std::cerr << "cannot listen on port " << port << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 1;
  }
  return 0;
}
