#pragma once

#include "trr/convex_corridor.hpp"
#include "trr/curves.hpp"
#include "trr/global_planner.hpp"
#include "trr/grid_world.hpp"
#include "trr/simulator.hpp"
#include "trr/teach_session.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace trr::io {

// ---------------------------------------------------------------------------
// File formats. Every document is JSON; floats are written with 17
// significant digits so that parse(write(x)) reproduces x bit for bit.

std::string format_double(double v);

std::string write_map(const OccupancyGrid& grid);
OccupancyGrid read_map(std::string_view text);

std::string write_path(const std::vector<TimedPoint>& path);
std::vector<TimedPoint> read_path(std::string_view text);

std::string write_polyhedron(const Polyhedron& poly);
Polyhedron read_polyhedron(std::string_view text);

std::string write_corridor(const FlightCorridor& corridor);
FlightCorridor read_corridor(std::string_view text);

std::string write_trajectory(const PiecewiseBezier& traj);
PiecewiseBezier read_trajectory(std::string_view text);

std::string write_spline(const BSpline& spline);
BSpline read_spline(std::string_view text);

std::string write_run_log(const RunLog& log);
RunLog read_run_log(std::string_view text);

/// Whole-file helpers; failures raise InvalidInput naming the path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Hex SHA-256 of the canonical serialization of a polyhedron list.
std::string corridor_checksum(const std::vector<Polyhedron>& polyhedra);

// ---------------------------------------------------------------------------
// Teach protocol. One TeachProtocol per connected client; messages are JSON
// text, one per frame.
//
// in:  {"type":"pose","t":T,"p":[x,y,z]}  {"type":"finish"}
// out: {"type":"corridor_delta","seq":N,"op":"push"|"pop"|"none","polyhedron":{...}}
//      {"type":"checksum","seq":N,"size":K,"value":"<hex>"}   after each delta burst
//      {"type":"plan_result","trajectory":{...},"rounds":R,"duration":D}
//      {"type":"error","text":"..."}

struct PlanSettings {
  KinodynamicLimits limits;
  DescentConfig descent;
  TeachOptions teach;
  bool checksums = true;
};

class TeachProtocol {
 public:
  TeachProtocol(std::shared_ptr<const OccupancyGrid> grid, PlanSettings settings);

  /// Processes one inbound message and returns the outbound messages in
  /// order. Never throws for bad input; errors become error messages and the
  /// session stays as it was.
  std::vector<std::string> handle(std::string_view message);

  bool active() const { return session_.has_value(); }
  const std::vector<Polyhedron>* corridor() const { return session_ ? &session_->polyhedra() : nullptr; }

 private:
  std::string delta_message(const CorridorDelta& d);
  std::string checksum_message() const;

  std::shared_ptr<const OccupancyGrid> grid_;
  PlanSettings settings_;
  std::optional<TeachSession> session_;
  std::uint64_t seq_ = 0;
};

/// Client-side replica of a session's corridor built from outbound messages.
class CorridorMirror {
 public:
  /// Applies one outbound message. Returns false for messages that are not
  /// corridor deltas or checksums; throws InvalidInput on an out-of-order
  /// delta or a checksum that does not match the replica.
  bool apply(std::string_view message);

  const std::vector<Polyhedron>& polyhedra() const { return polyhedra_; }
  std::uint64_t last_seq() const { return seq_; }
  int checksums_verified() const { return verified_; }

 private:
  std::vector<Polyhedron> polyhedra_;
  std::uint64_t seq_ = 0;
  int verified_ = 0;
};

// ---------------------------------------------------------------------------
// WebSocket transport (RFC 6455 text frames, no extensions).

class TeachServer {
 public:
  /// Binds 127.0.0.1:|port| (0 picks a free port) and starts accepting.
  TeachServer(std::shared_ptr<const OccupancyGrid> grid, PlanSettings settings, int port = 0,
              std::string bind_address = "127.0.0.1");
  ~TeachServer();
  TeachServer(const TeachServer&) = delete;
  TeachServer& operator=(const TeachServer&) = delete;

  int port() const { return port_; }
  void stop();
  std::size_t sessions_served() const { return served_.load(); }

 private:
  struct Connection;
  void accept_loop();
  void serve(std::shared_ptr<Connection> c);

  std::shared_ptr<const OccupancyGrid> grid_;
  PlanSettings settings_;
  int listen_fd_ = -1;
  int port_ = 0;
  std::atomic<bool> stopping_{false};
  std::atomic<std::size_t> served_{0};
  std::thread acceptor_;
  std::mutex mu_;
  std::vector<std::shared_ptr<Connection>> connections_;
};

class WebSocketClient {
 public:
  WebSocketClient(const std::string& host, int port, const std::string& resource = "/");
  ~WebSocketClient();
  WebSocketClient(const WebSocketClient&) = delete;
  WebSocketClient& operator=(const WebSocketClient&) = delete;

  void send(std::string_view text);
  /// Next text message, or nullopt on timeout or close.
  std::optional<std::string> receive(std::chrono::milliseconds timeout = std::chrono::milliseconds(30000));
  void close();

 private:
  int fd_ = -1;
  std::string buffer_;
};

}  // namespace trr::io
