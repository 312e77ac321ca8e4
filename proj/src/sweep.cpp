#include "cvent/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>

#include "cvent/reduction.hpp"
#include "cvent/spectra.hpp"
#include "cvent/states.hpp"
#include "cvent/swap.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cvent {

namespace {

const std::set<std::string> kFamilies = {"bell", "cat", "squeezed", "swap-bell",
                                         "swap-cat"};

std::set<std::string> axis_names(const std::string& family) {
    if (family == "bell") return {"alpha", "beta", "x1", "x2", "sigma"};
    if (family == "squeezed") return {"r"};
    if (family == "cat") return {"d", "a0_sq"};
    if (family == "swap-bell") return {"alpha", "beta"};
    if (family == "swap-cat") return {"a", "b"};
    return {};
}

double axis_value(const SweepAxis& ax, int i) {
    if (ax.steps == 1) return ax.min;
    return ax.min + (ax.max - ax.min) * i / (ax.steps - 1);
}

double fixed_or(const std::map<std::string, double>& fixed, const std::string& key,
                double fallback) {
    auto it = fixed.find(key);
    return it == fixed.end() ? fallback : it->second;
}

// one sweep cell, routed through the same reduce/converge pipeline as the
// rest of the library
SweepCell run_cell(const SweepSpec& spec, double v1, double v2) {
    std::map<std::string, double> par = spec.fixed;
    if (spec.axis1.name != "none") par[spec.axis1.name] = v1;
    if (spec.axis2.name != "none") par[spec.axis2.name] = v2;

    DensityKernel kernel;
    if (spec.family == "bell") {
        kernel = reduce_gaussian(
            make_bell(fixed_or(par, "alpha", 1.0), fixed_or(par, "beta", 1.0),
                      fixed_or(par, "x1", 0.0), fixed_or(par, "x2", 0.0),
                      fixed_or(par, "sigma", 1.0)),
            1);
    } else if (spec.family == "squeezed") {
        kernel = reduce_gaussian(make_squeezed(fixed_or(par, "r", 0.0)), 1);
    } else if (spec.family == "cat") {
        const double a0sq = fixed_or(par, "a0_sq", 0.5);
        if (a0sq < 0.0 || a0sq > 1.0)
            throw std::domain_error("cat sweep: a0_sq must lie in [0, 1]");
        kernel = reduce_mixture(make_cat(std::sqrt(a0sq), std::sqrt(1.0 - a0sq),
                                         fixed_or(par, "d", 1.0)),
                                1);
    } else if (spec.family == "swap-bell") {
        SwapOutcome oc{fixed_or(par, "a", 0.0), fixed_or(par, "b", 0.0), 0.0};
        kernel = reduce_gaussian(
            swap_bell(fixed_or(par, "alpha", 1.0), fixed_or(par, "beta", 1.0),
                      fixed_or(par, "c", 0.0), oc, fixed_or(par, "sigma", 1.0)),
            1);
    } else {  // swap-cat
        const double a0sq = fixed_or(par, "a0_sq", 0.5);
        if (a0sq < 0.0 || a0sq > 1.0)
            throw std::domain_error("swap-cat sweep: a0_sq must lie in [0, 1]");
        SwapOutcome oc{fixed_or(par, "a", 0.0), fixed_or(par, "b", 0.0),
                       fixed_or(par, "mu", 0.0)};
        kernel = reduce_mixture(swap_cat(std::sqrt(a0sq), std::sqrt(1.0 - a0sq),
                                         fixed_or(par, "d", 1.0), oc),
                                1);
    }

    // a squeezed or cat state with zero cross correlation has a rank-1
    // kernel whose entropy is exactly zero; converge handles it like any
    // other kernel
    const EntanglementResult res = converge(kernel, spec.tolerance_sigfigs);
    SweepCell cell;
    cell.axis1 = v1;
    cell.axis2 = v2;
    cell.entropy_bits = res.entropy_bits;
    cell.converged = res.converged;
    cell.trace_rel_err = res.spectrum.trace_rel_err.value_or(0.0);
    return cell;
}

}  // namespace

void validate(const SweepSpec& spec) {
    if (!kFamilies.count(spec.family))
        throw std::invalid_argument("sweep: unknown family '" + spec.family + "'");
    const auto names = axis_names(spec.family);
    for (const SweepAxis* ax : {&spec.axis1, &spec.axis2}) {
        if (ax->name != "none" && !names.count(ax->name))
            throw std::invalid_argument("sweep: axis '" + ax->name +
                                        "' is not valid for family " + spec.family);
        if (ax->steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
        if (ax->min > ax->max)
            throw std::invalid_argument("sweep: axis min must not exceed max");
    }
    if (spec.tolerance_sigfigs < 1)
        throw std::invalid_argument("sweep: tolerance_sigfigs must be >= 1");
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec, int jobs) {
    validate(spec);
    const std::ptrdiff_t n1 = spec.axis1.steps, n2 = spec.axis2.steps;
    std::vector<SweepCell> cells(n1 * n2);

#ifdef _OPENMP
    const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (std::ptrdiff_t idx = 0; idx < n1 * n2; ++idx) {
        const double v1 = axis_value(spec.axis1, static_cast<int>(idx / n2));
        const double v2 = axis_value(spec.axis2, static_cast<int>(idx % n2));
        try {
            cells[idx] = run_cell(spec, v1, v2);
        } catch (const std::exception&) {
            cells[idx] = SweepCell{v1, v2, 0.0, false, 0.0};
        }
    }
    return cells;
}

std::string format_sig10(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 10);
    return std::string(buf, res.ptr);
}

void write_csv(const std::vector<SweepCell>& cells, std::ostream& out) {
    out << "axis1,axis2,entropy_bits,converged,trace_rel_err\n";
    for (const auto& c : cells)
        out << format_sig10(c.axis1) << ',' << format_sig10(c.axis2) << ','
            << format_sig10(c.entropy_bits) << ',' << (c.converged ? '1' : '0') << ','
            << format_sig10(c.trace_rel_err) << '\n';
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

SweepSpec sweep_from_config(const std::map<std::string, std::string>& kv) {
    SweepSpec spec;
    spec.axis2.name = "none";
    auto num = [](const std::string& s) {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("config: bad number '" + s + "'");
        return v;
    };
    for (const auto& [key, val] : kv) {
        if (key == "family") spec.family = val;
        else if (key == "axis1") spec.axis1.name = val;
        else if (key == "axis2") spec.axis2.name = val;
        else if (key == "axis1_min") spec.axis1.min = num(val);
        else if (key == "axis1_max") spec.axis1.max = num(val);
        else if (key == "axis1_steps") spec.axis1.steps = static_cast<int>(num(val));
        else if (key == "axis2_min") spec.axis2.min = num(val);
        else if (key == "axis2_max") spec.axis2.max = num(val);
        else if (key == "axis2_steps") spec.axis2.steps = static_cast<int>(num(val));
        else if (key == "tolerance_sigfigs") spec.tolerance_sigfigs = static_cast<int>(num(val));
        else if (key == "out" || key == "jobs") continue;  // handled by the CLI
        else spec.fixed[key] = num(val);
    }
    validate(spec);
    return spec;
}

}  // namespace cvent
