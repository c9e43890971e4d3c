#pragma once
// Search loop: sample separators, solve the integer system, factor the hit,
// certify the Salem factor, and collect distinct records.

#include "salem/certify.hpp"
#include "salem/constraints.hpp"
#include "salem/factorize.hpp"
#include "salem/ilp.hpp"
#include "salem/numeric.hpp"
#include "salem/polynomial.hpp"
#include "salem/transform.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace salem {

struct SearchConfig {
    int two_d = 10;
    Rational eta = default_eta();
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    int grid_log2 = 16;
    std::string out_path;

    int d() const { return two_d / 2; }

    /// Throws InvalidConfig describing the first violated constraint.
    void validate() const {
        if (two_d % 2 != 0) throw InvalidConfig("two_d must be even, got " + std::to_string(two_d));
        if (two_d < 4 || two_d > 64) throw InvalidConfig("two_d must lie in [4, 64], got " + std::to_string(two_d));
        if (workers < 1) throw InvalidConfig("workers must be positive");
        if (grid_log2 < 2 || grid_log2 > 40) throw InvalidConfig("grid_log2 must lie in [2, 40]");
        Threshold check(eta);
    }
};

struct Provenance {
    std::uint64_t seed = 0;
    int worker = 0;
    std::uint64_t trial = 0;
};

struct SalemRecord {
    int two_d = 0;
    std::string tau;
    /// 1, c_1, ..., c_d
    std::vector<Integer> half_coeffs;
    /// All coefficients of P, highest power first.
    std::vector<Integer> full_coeffs;
    /// Coefficients of q1, highest power first.
    std::vector<Integer> q_coeffs;
    Provenance provenance;
};

inline SalemRecord make_record(const SalemCertificate& cert, const Provenance& prov) {
    SalemRecord rec;
    rec.two_d = cert.p.degree();
    rec.tau = compute_tau(cert);
    rec.half_coeffs = half_coeffs(cert.p);
    rec.full_coeffs = cert.p.descending();
    rec.q_coeffs = cert.q1.descending();
    rec.provenance = prov;
    return rec;
}

// JSON carries coefficients as numbers when they fit in 64 bits, otherwise as
// decimal strings.
inline nlohmann::json coeffs_to_json(const std::vector<Integer>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& c : v) {
        if (fits_int64(c)) {
            arr.push_back(to_int64(c));
        } else {
            arr.push_back(c.get_str());
        }
    }
    return arr;
}

inline std::vector<Integer> coeffs_from_json(const nlohmann::json& arr) {
    std::vector<Integer> out;
    for (const auto& v : arr) {
        if (v.is_number_integer()) {
            out.emplace_back(static_cast<long>(v.get<std::int64_t>()));
        } else if (v.is_string()) {
            Integer z;
            if (z.set_str(v.get<std::string>(), 10) != 0) throw Error("bad coefficient " + v.dump());
            out.push_back(z);
        } else {
            throw Error("bad coefficient " + v.dump());
        }
    }
    return out;
}

inline nlohmann::json record_to_json(const SalemRecord& r) {
    nlohmann::json j;
    j["two_d"] = r.two_d;
    j["tau"] = r.tau;
    j["half_coeffs"] = coeffs_to_json(r.half_coeffs);
    j["full_coeffs"] = coeffs_to_json(r.full_coeffs);
    j["q_coeffs"] = coeffs_to_json(r.q_coeffs);
    j["seed"] = r.provenance.seed;
    j["worker"] = r.provenance.worker;
    j["trial"] = r.provenance.trial;
    return j;
}

inline SalemRecord record_from_json(const nlohmann::json& j) {
    SalemRecord r;
    r.two_d = j.at("two_d").get<int>();
    r.tau = j.at("tau").get<std::string>();
    r.half_coeffs = coeffs_from_json(j.at("half_coeffs"));
    r.full_coeffs = coeffs_from_json(j.at("full_coeffs"));
    r.q_coeffs = coeffs_from_json(j.at("q_coeffs"));
    r.provenance.seed = j.at("seed").get<std::uint64_t>();
    r.provenance.worker = j.at("worker").get<int>();
    r.provenance.trial = j.at("trial").get<std::uint64_t>();
    return r;
}

inline nlohmann::json config_to_json(const SearchConfig& cfg) {
    nlohmann::json run;
    run["two_d"] = cfg.two_d;
    run["threshold"] = cfg.eta.get_str();
    run["trials"] = cfg.trials;
    run["seed"] = cfg.seed;
    run["workers"] = cfg.workers;
    run["grid_log2"] = cfg.grid_log2;
    return nlohmann::json{{"run", run}};
}

/// Append-only record list keyed on the full coefficient vector.
class ResultStore {
public:
    /// True iff the record's polynomial had not been seen before.
    bool insert(const SalemRecord& rec) {
        if (!keys_.insert(rec.full_coeffs).second) return false;
        records_.push_back(rec);
        return true;
    }

    const std::vector<SalemRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    bool contains(const std::vector<Integer>& full_coeffs) const { return keys_.count(full_coeffs) > 0; }

private:
    std::vector<SalemRecord> records_;
    std::set<std::vector<Integer>> keys_;
};

inline bool dedup_insert(ResultStore& store, const SalemRecord& rec) { return store.insert(rec); }

enum class TrialStatus { Hit, Infeasible, NoSalemFactor, Rejected };

struct TrialOutcome {
    TrialStatus status = TrialStatus::Infeasible;
    std::optional<SalemRecord> record;
    /// Histogram key: "infeasible", "no_salem_factor" or "rejected:<reason>".
    std::string reason;
    /// The solver's half-polynomial, when the system was feasible.
    std::optional<IntPoly> q;
};

/// One pass of the loop. MultipleQualifying propagates.
template <class Rng>
TrialOutcome run_trial(const SearchConfig& cfg, const Threshold& thr, Rng& rng, const Provenance& prov) {
    TrialOutcome out;
    const int d = cfg.d();
    SeparatorTuple sep = sample_separators(d, rng, cfg.grid_log2);
    ConstraintSystem sys = build_system(sep, thr);
    FeasibilityResult res = ilp_feasible(sys);
    if (!res.feasible()) {
        out.status = TrialStatus::Infeasible;
        out.reason = "infeasible";
        return out;
    }
    std::vector<Integer> c = *res.assignment;
    c.emplace_back(1);
    IntPoly q(std::move(c));
    out.q = q;
    std::optional<IntPoly> q1;
    if (is_irreducible(q)) {
        q1 = q;
    } else {
        q1 = select_salem_factor(factor(q), thr);
    }
    if (!q1) {
        out.status = TrialStatus::NoSalemFactor;
        out.reason = "no_salem_factor";
        return out;
    }
    CertifyResult cert = certify(*q1, thr);
    if (auto* rej = std::get_if<Rejection>(&cert)) {
        out.status = TrialStatus::Rejected;
        out.reason = std::string("rejected:") + to_string(rej->reason);
        return out;
    }
    out.status = TrialStatus::Hit;
    out.reason = "hit";
    out.record = make_record(std::get<SalemCertificate>(cert), prov);
    return out;
}

struct SearchSummary {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t duplicates = 0;
    std::map<std::string, std::uint64_t> outcomes;
    double wall_seconds = 0;
    ResultStore store;

    std::size_t distinct() const { return store.size(); }
};

inline void print_summary(std::ostream& os, const SearchSummary& s) {
    os << "trials " << s.trials << "\n";
    os << "hits " << s.hits << "\n";
    os << "distinct " << s.distinct() << "\n";
    os << "duplicates " << s.duplicates << "\n";
    for (const auto& [k, v] : s.outcomes) os << "outcome " << k << " " << v << "\n";
    os << "wall_seconds " << s.wall_seconds << "\n";
    for (const auto& r : s.store.records()) {
        os << "record " << r.two_d << " " << r.tau;
        for (const auto& c : r.half_coeffs) os << " " << c.get_str();
        os << "\n";
    }
}

/// Runs cfg.trials trials over cfg.workers threads (worker w seeds its
/// generator with seed + w and takes trials w, w + workers, ...). Distinct
/// records are appended to cfg.out_path as JSON lines after a header line.
/// Rejected candidates go to `diagnostics` when it is non-null.
inline SearchSummary run_search(const SearchConfig& cfg, std::ostream* diagnostics = nullptr) {
    cfg.validate();
    const Threshold thr(cfg.eta);
    const auto start = std::chrono::steady_clock::now();

    std::ofstream out;
    if (!cfg.out_path.empty()) {
        out.open(cfg.out_path, std::ios::app);
        if (!out) throw std::ios_base::failure("cannot open output file " + cfg.out_path);
        out << config_to_json(cfg).dump() << "\n";
        out.flush();
        if (!out) throw std::ios_base::failure("cannot write output file " + cfg.out_path);
    }

    SearchSummary summary;
    std::mutex sink;
    std::atomic<bool> abort{false};
    std::exception_ptr failure;

    auto worker_fn = [&](int w) {
        std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(w));
        for (std::uint64_t t = static_cast<std::uint64_t>(w); t < cfg.trials; t += static_cast<std::uint64_t>(cfg.workers)) {
            if (abort.load(std::memory_order_relaxed)) return;
            TrialOutcome res;
            try {
                res = run_trial(cfg, thr, rng, Provenance{cfg.seed, w, t});
            } catch (...) {
                std::lock_guard lock(sink);
                if (!failure) failure = std::current_exception();
                abort = true;
                return;
            }
            std::lock_guard lock(sink);
            ++summary.trials;
            ++summary.outcomes[res.reason];
            if (diagnostics && res.status != TrialStatus::Hit && res.status != TrialStatus::Infeasible) {
                *diagnostics << "trial " << t << " worker " << w << " " << res.reason << " q = " << res.q->to_string()
                             << "\n";
            }
            if (!res.record) continue;
            ++summary.hits;
            if (!summary.store.insert(*res.record)) {
                ++summary.duplicates;
                continue;
            }
            if (out.is_open()) {
                out << record_to_json(*res.record).dump() << "\n";
                out.flush();
                if (!out) {
                    failure = std::make_exception_ptr(std::ios_base::failure("write failed: " + cfg.out_path));
                    abort = true;
                    return;
                }
            }
        }
    };

    if (cfg.workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < cfg.workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

/// Re-certifies every stored record from its q coefficients; returns the
/// records that fail (empty when the store is sound).
inline std::vector<SalemRecord> verify_store(const ResultStore& store, const Threshold& thr) {
    std::vector<SalemRecord> bad;
    for (const auto& rec : store.records()) {
        IntPoly q1 = IntPoly::from_descending(std::span<const Integer>(rec.q_coeffs));
        CertifyResult cert = certify(q1, thr);
        const auto* ok = std::get_if<SalemCertificate>(&cert);
        if (!ok || ok->p.descending() != rec.full_coeffs || compute_tau(*ok) != rec.tau) bad.push_back(rec);
    }
    return bad;
}

/// Records from JSONL files; header lines are skipped.
inline std::vector<SalemRecord> read_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read " + path);
    std::vector<SalemRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (j.contains("run")) continue;
        out.push_back(record_from_json(j));
    }
    return out;
}

}  // namespace salem
