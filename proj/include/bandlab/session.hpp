// One interactive mutation session and its HTTP JSON front end.
#pragma once

#include "bandlab/bands.hpp"
#include "bandlab/coxeter.hpp"
#include "bandlab/io.hpp"
#include "bandlab/quiver.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace bandlab {

struct SessionResult {
    int status = 200;
    json body;
};

// A window seed of Gamma~ for c, optionally evaluated on a band. After a
// mutation the new vertex gets a minor label again when its value equals the
// original label or the tau_red / tau_green prediction at that vertex.
class Session {
public:
    Session(const CoxeterElement& c, int M, int N, std::optional<BandWindow> band);

    json state() const;
    SessionResult mutate(int vertex);
    SessionResult undo();
    SessionResult reset();
    SessionResult band() const;

private:
    json state_locked() const;
    void relabel(Seed& s, int v) const;

    CoxeterElement c_, ct_;
    int M_, N_;
    std::optional<BandWindow> band_;
    Seed initial_;
    std::vector<std::vector<MinorLabel>> candidates_;  // per vertex
    std::vector<Seed> stack_;
    std::vector<int> history_;
    mutable std::mutex mu_;
};

// SL(n), c = c_st, window (M,N), values on a band sampled from seed (resampled
// while some initial value vanishes).
std::unique_ptr<Session> make_band_session(int n, int M, int N, uint64_t seed);

// GET /api/state, POST /api/mutate {vertex}, POST /api/undo, POST /api/reset, GET /api/band.
class HttpServer {
public:
    explicit HttpServer(Session& s);
    ~HttpServer();
    // Port 0 picks a free port; returns the bound port or -1.
    int bind(const std::string& host, int port);
    void listen();  // blocks until stop()
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace bandlab
