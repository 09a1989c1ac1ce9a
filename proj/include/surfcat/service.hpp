#pragma once

#include <mutex>

#include "surfcat/json_io.hpp"

namespace httplib {
class Server;
}

namespace surfcat {

// Flips reuse the flipped arc's id, so replaying history on base gives current.
class Session {
 public:
  explicit Session(Triangulation base);

  Json state() const;
  Json flip(ArcId arc);
  Json undo();
  Json reset();
  Json quiver() const;
  Json object_ar(const std::string& spec) const;
  Json hom(const std::string& from, const std::string& to) const;

 private:
  ModelPtr current_model() const;
  Json state_locked() const;

  Triangulation base_;
  Triangulation current_;
  std::vector<ArcId> history_;
  mutable std::mutex mu_;
};

// HTTP status for a domain error.
int http_status(ErrorCode code);

void mount(httplib::Server& server, Session& session);

}  // namespace surfcat
