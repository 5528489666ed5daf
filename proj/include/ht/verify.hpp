#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ht/hypercomplex.hpp"

namespace ht::verify {

struct Entry {
    std::string test;
    double tolerance;
    double observed;
    bool pass;
};

struct Report {
    std::string suite;
    double t;
    std::vector<Entry> entries;
    double wall_time_sec = 0.0;

    bool pass() const {
        for (const Entry& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

struct Params {
    std::uint64_t seed = 7;
    int samples = 1000;
    int trunc = 64;
    double tol_scale = 1.0;
};

Report ring_axioms(Scale s, const Params& p);
Report adjoint_laws(Scale s, const Params& p);
Report norm_closed_form(Scale s, const Params& p);
Report signatures(Scale s, const Params& p);
Report star_algebra(Scale s, const Params& p);
Report blaschke_suite(Scale s, const Params& p);
Report interpolation_suite(Scale s, const Params& p);
Report bracket_suite(Scale s, const Params& p);
Report fueter_suite(Scale s, const Params& p);
Report mu_blaschke_suite(Scale s, const Params& p);
Report rational_suite(Scale s, const Params& p);

using SuiteFn = Report (*)(Scale, const Params&);

const std::vector<std::pair<std::string, SuiteFn>>& all_suites();

/// Default scale sweep {-2, -1, -0.5, 0.5, 1, 2}.
const std::vector<double>& default_sweep();

/// Run every suite over the scales in a worker pool; reports come back
/// in fixed (suite, scale) order regardless of scheduling.
std::vector<Report> run_all(const std::vector<double>& scales, const Params& p);

/// Deterministic JSON rendering (17 significant digits); wall_time_sec is
/// the only field that differs between identical runs.
std::string report_json(const std::vector<Report>& reports, const Params& p);

} // namespace ht::verify
