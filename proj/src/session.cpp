#include "bandlab/session.hpp"

#include "bandlab/quiverzoo.hpp"

#include <httplib.h>

#include <algorithm>

namespace bandlab {

Session::Session(const CoxeterElement& c, int M, int N, std::optional<BandWindow> band)
    : c_(c), ct_(tilde_coxeter(c)), M_(M), N_(N), band_(std::move(band)) {
    initial_ = build_gamma_tilde_window(c_, M, N);
    candidates_.resize(initial_.quiver.size());
    for (int v = 0; v < initial_.quiver.size(); ++v) candidates_[v].push_back(*initial_.labels[v].minor);
    for (int dir : {1, -1}) {
        TauPrediction p = predict_tau(c_, M, N, dir);
        for (int v = 0; v < initial_.quiver.size(); ++v)
            if (p.map[v] >= 0) candidates_[v].push_back(*p.shifted.labels[p.map[v]].minor);
    }
    if (band_) {
        for (int v = 0; v < initial_.quiver.size(); ++v) initial_.labels[v].value = eval_minor_label(*band_, c_, ct_, *initial_.labels[v].minor);
    }
    stack_.push_back(initial_);
}

void Session::relabel(Seed& s, int v) const {
    if (!band_ || !s.labels[v].value) return;
    for (const auto& m : candidates_[v]) {
        Q val;
        try {
            val = eval_minor_label(*band_, c_, ct_, m);
        } catch (const std::out_of_range&) {
            continue;
        }
        if (val == *s.labels[v].value) {
            s.labels[v].minor = m;
            return;
        }
    }
}

json Session::state_locked() const {
    json j = seed_to_json(stack_.back());
    j["type"] = c_.data.name();
    j["word"] = c_.word;
    j["window"] = {M_, N_};
    j["history"] = history_;
    j["has_band"] = band_.has_value();
    return j;
}

json Session::state() const {
    std::lock_guard lock(mu_);
    return state_locked();
}

SessionResult Session::mutate(int vertex) {
    std::lock_guard lock(mu_);
    const Seed& cur = stack_.back();
    if (vertex < 0 || vertex >= cur.quiver.size()) return {400, {{"error", "no vertex " + std::to_string(vertex)}}};
    const auto& x = cur.quiver.vertex(vertex);
    if (x.frozen) return {409, {{"error", "vertex " + vertex_name(x) + " is frozen and cannot be mutated"}}};
    if (cur.labels[vertex].value && *cur.labels[vertex].value == 0)
        return {422, {{"error", "vertex " + vertex_name(x) + " has value 0; the exchange relation would divide by zero"}}};
    Seed next = bandlab::mutate(cur, vertex);
    relabel(next, vertex);
    stack_.push_back(std::move(next));
    history_.push_back(vertex);
    return {200, state_locked()};
}

SessionResult Session::undo() {
    std::lock_guard lock(mu_);
    if (stack_.size() == 1) return {409, {{"error", "nothing to undo"}}};
    stack_.pop_back();
    history_.pop_back();
    return {200, state_locked()};
}

SessionResult Session::reset() {
    std::lock_guard lock(mu_);
    stack_.assign(1, initial_);
    history_.clear();
    return {200, state_locked()};
}

SessionResult Session::band() const {
    std::lock_guard lock(mu_);
    if (!band_) return {404, {{"error", "this session has no band"}}};
    return {200, band_to_json(*band_)};
}

std::unique_ptr<Session> make_band_session(int n, int M, int N, uint64_t seed) {
    const CoxeterElement c = sl_standard(n);
    const CoxeterElement ct = tilde_coxeter(c);
    // the window must hold every label, including the translated ones
    int lo = 0, hi = 0;
    for (int dir : {1, -1}) {
        TauPrediction p = predict_tau(c, M, N, dir);
        for (const auto& lab : p.shifted.labels) {
            lo = std::min(lo, lab.minor->s);
            hi = std::max(hi, lab.minor->s);
        }
    }
    const Seed w = build_gamma_tilde_window(c, M, N);
    for (int t = 0; t < 8; ++t) {
        BandWindow b = sample_band(n, lo, hi, stream_seed(seed, t));
        bool ok = true;
        for (const auto& lab : w.labels) ok = ok && eval_minor_label(b, c, ct, *lab.minor) != 0;
        if (ok) return std::make_unique<Session>(c, M, N, std::move(b));
    }
    throw std::runtime_error("no band without zero labels after 8 samples");
}

struct HttpServer::Impl {
    Session& session;
    httplib::Server server;
    explicit Impl(Session& s) : session(s) {}
};

namespace {

void reply(httplib::Response& res, const SessionResult& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

HttpServer::HttpServer(Session& s) : impl_(std::make_unique<Impl>(s)) {
    auto& srv = impl_->server;
    Session& ses = s;
    srv.Get("/api/state", [&ses](const httplib::Request&, httplib::Response& res) { reply(res, {200, ses.state()}); });
    srv.Get("/api/band", [&ses](const httplib::Request&, httplib::Response& res) { reply(res, ses.band()); });
    srv.Post("/api/mutate", [&ses](const httplib::Request& req, httplib::Response& res) {
        json body = json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.contains("vertex") || !body["vertex"].is_number_integer()) {
            reply(res, {400, {{"error", "expected {\"vertex\": <id>}"}}});
            return;
        }
        reply(res, ses.mutate(body["vertex"].get<int>()));
    });
    srv.Post("/api/undo", [&ses](const httplib::Request&, httplib::Response& res) { reply(res, ses.undo()); });
    srv.Post("/api/reset", [&ses](const httplib::Request&, httplib::Response& res) { reply(res, ses.reset()); });
    srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
            std::rethrow_exception(ep);
        } catch (const std::exception& e) {
            what = e.what();
        } catch (...) {
        }
        reply(res, {500, {{"error", what}}});
    });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace bandlab
