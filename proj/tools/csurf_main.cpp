// Command-line surface for the cubic-surface period library: nodal
// classification in the ball, the Siegel embedding, number-field scans, CM
// certificates, and the elliptic-integral demo.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "csurf/arrangement.hpp"
#include "csurf/cm.hpp"
#include "csurf/elliptic.hpp"
#include "csurf/scan.hpp"
#include "csurf/siegel.hpp"

namespace {

using namespace csurf;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

std::vector<QOmega> parse_vector(const std::string& text) {
    std::vector<QOmega> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        auto v = parse_qomega(cur);
        if (!v) throw DomainError("bad-vector", "cannot parse scalar '" + cur + "'");
        out.push_back(*v);
    }
    return out;
}

arr::BallPoint preset_point(const std::string& name) {
    auto q = [](int a, int b) { return QOmega(Rat(a), Rat(b)); };
    if (name == "cayley")
        return arr::BallPoint({q(1, 0), q(0, 0), q(0, 0), q(0, 0), q(0, 0)});
    if (name == "fermat")  // 2 - conj(omega) = 3 + omega
        return arr::BallPoint({q(3, 1), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    if (name == "clebsch")
        return arr::BallPoint({q(3, 0), q(1, 0), q(1, 0), q(1, 0), q(1, 0)});
    throw DomainError("unknown-preset", name);
}

int cmd_classify(const std::string& vec, const std::string& preset, bool json) {
    arr::BallPoint p;
    if (!preset.empty()) {
        p = preset_point(preset);
    } else {
        auto coords = parse_vector(vec);
        if (coords.size() == 4) {
            std::array<QOmega, 4> b;
            std::copy(coords.begin(), coords.end(), b.begin());
            p = arr::BallPoint::from_b(b);
        } else if (coords.size() == 5) {
            std::array<QOmega, 5> v;
            std::copy(coords.begin(), coords.end(), v.begin());
            p = arr::BallPoint(v);
        } else {
            throw DomainError("bad-vector", "expected 4 or 5 coordinates");
        }
    }
    if (sign_of(arr::ball_norm(p)) <= 0) {
        std::cerr << "not in the ball\n";
        return kExitUsage;
    }
    auto cls = arr::classify_point(p);
    if (json) {
        std::cout << "{\"k\":" << cls.k << ",\"result\":\""
                  << (cls.smooth() ? "smooth" : "nodal") << "\",\"normals\":[";
        for (int i = 0; i < cls.k; ++i) {
            if (i) std::cout << ",";
            std::cout << "\"";
            for (int j = 0; j < 5; ++j)
                std::cout << (j ? "," : "") << cyclo_str(cls.hyperplanes[i].normal.v[j]);
            std::cout << "\"";
        }
        std::cout << "]}\n";
        return kExitOk;
    }
    if (cls.smooth()) {
        std::cout << "smooth\n";
    } else {
        std::cout << "nodal, " << cls.k << " hyperplanes\n";
        for (const auto& h : cls.hyperplanes) {
            std::cout << "  normal: (";
            for (int j = 0; j < 5; ++j) std::cout << (j ? ", " : "") << cyclo_str(h.normal.v[j]);
            std::cout << ")\n";
        }
    }
    return kExitOk;
}

std::string shadow(const QOmega& z, int digits) {
    // omega = -1/2 + sqrt(3)/2 i, rendered with a certified error bound
    RatInterval s3 = sqrt3_enclosure(96);
    RatInterval re = RatInterval(z.x) - RatInterval(z.y) * RatInterval(make_rat(1, 2));
    RatInterval im = RatInterval(z.y) * s3 * RatInterval(make_rat(1, 2));
    return interval_decimal(re, digits) + "  +  " + interval_decimal(im, digits) + " i";
}

int cmd_embed(const std::string& vec, bool exact, bool json) {
    auto coords = parse_vector(vec);
    if (coords.size() != 4) throw DomainError("bad-vector", "expected 4 coordinates");
    std::array<QOmega, 4> b;
    std::copy(coords.begin(), coords.end(), b.begin());
    RatSignCtx ctx;
    siegel::require_in_ball(b, ctx);
    auto pm = siegel::period_matrix(b);
    auto closed = siegel::siegel_point_closed(b);
    auto solved = siegel::siegel_point_solve(pm);
    bool agree = closed.Z == solved.Z;
    auto rep = siegel::riemann_check(pm, ctx);
    bool im_pd = siegel::im_positive_definite(closed, ctx);

    auto entry = [&](const QOmega& z) { return exact ? cyclo_str(z) : shadow(z, 15); };
    if (json) {
        std::cout << "{\"P\":[";
        for (int i = 0; i < 5; ++i) {
            if (i) std::cout << ",";
            std::cout << "[";
            for (int j = 0; j < 10; ++j)
                std::cout << (j ? "," : "") << "\"" << entry(pm.P(i, j)) << "\"";
            std::cout << "]";
        }
        std::cout << "],\"Z\":[";
        for (int i = 0; i < 5; ++i) {
            if (i) std::cout << ",";
            std::cout << "[";
            for (int j = 0; j < 5; ++j)
                std::cout << (j ? "," : "") << "\"" << entry(closed.Z(i, j)) << "\"";
            std::cout << "]";
        }
        std::cout << "],\"dual_path_equal\":" << (agree ? "true" : "false")
                  << ",\"riemann_isotropy\":" << (rep.isotropy ? "true" : "false")
                  << ",\"riemann_positivity\":" << (rep.positivity ? "true" : "false")
                  << ",\"im_Z_definite\":" << (im_pd ? "true" : "false") << "}\n";
        return kExitOk;
    }
    std::cout << "P(b) = (A, B), rows:\n";
    for (int i = 0; i < 5; ++i) {
        std::cout << "  ";
        for (int j = 0; j < 10; ++j) std::cout << (j ? " | " : "") << entry(pm.P(i, j));
        std::cout << "\n";
    }
    std::cout << "Z(b) entries:\n";
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j)
            std::cout << "  Z" << i << j << " = " << entry(closed.Z(i, j)) << "\n";
    std::cout << "dual-path agreement (closed form vs exact A^-1 B): "
              << (agree ? "pass" : "FAIL") << "\n";
    std::cout << "riemann: isotropy " << (rep.isotropy ? "pass" : "FAIL") << ", positivity "
              << (rep.positivity ? "pass" : "FAIL") << "\n";
    std::cout << "Im Z positive definite: " << (im_pd ? "pass" : "FAIL") << "\n";
    return (agree && rep.pass() && im_pd) ? kExitOk : kExitInternal;
}

int cmd_scan(const std::string& path, int jobs, bool json) {
    auto rep = scan::run_scan_file(path, jobs);
    std::cout << (json ? scan::format_json(rep) + "\n" : scan::format_table(rep));
    return kExitOk;
}

int cmd_cm_build(const std::string& path, const std::string& disc, const std::string& eps_text) {
    auto input = scan::parse_field_file(path);
    if (input.records.empty()) throw DomainError("empty-field-file", path);
    const nf::FieldRecord* rec = nullptr;
    if (disc.empty()) {
        rec = &input.records.front();
    } else {
        Int want(disc, 10);
        for (const auto& r : input.records)
            if (r.disc == want) rec = &r;
        if (!rec) throw DomainError("disc-not-found", disc);
    }
    nf::SignVector eps;
    if (!eps_text.empty()) {
        std::string cur;
        std::istringstream is(eps_text);
        while (std::getline(is, cur, ',')) {
            if (cur == "+" || cur == "+1")
                eps.push_back(1);
            else if (cur == "-" || cur == "-1")
                eps.push_back(-1);
            else
                throw DomainError("bad-eps", "entries must be + or -");
        }
        int minus = 0;
        for (int v : eps) minus += (v < 0);
        if (minus != 1) throw DomainError("bad-eps", "exactly one -1 required");
    }
    auto cert = cm::cm_build(*rec, eps);
    std::cout << cm::format_certificate(cert);
    return kExitOk;
}

int cmd_elliptic(int digits) {
    auto r = elliptic::elliptic_demo(digits);
    std::cout.precision(15);
    std::cout << "quadrature  integral_1^inf dx/sqrt(x^3-1) = " << r.quadrature << "\n";
    std::cout << "Gamma(1/3)^3 / (2^(4/3) pi)               = " << r.gamma_product << "\n";
    std::cout.precision(3);
    std::cout << std::scientific << "|difference| = " << r.difference << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact period geometry of stable cubic surfaces"};
    app.require_subcommand(1);

    std::string vec, preset, file, disc, eps;
    bool exact = false, json = false;
    int jobs = 1, digits = 8;

    auto* classify = app.add_subcommand("classify", "nodal classification of a ball point");
    classify->add_option("point", vec, "exact Q(w) 5-vector or normalized 4-vector");
    classify->add_option("--preset", preset, "cayley | fermat | clebsch");
    classify->add_flag("--json", json, "machine output");

    auto* embed = app.add_subcommand("embed", "period matrix and Siegel point of b");
    embed->add_option("b", vec, "4 exact Q(w) coordinates")->required();
    embed->add_flag("--exact", exact, "print exact entries");
    embed->add_flag("--json", json, "machine output");

    auto* scan = app.add_subcommand("scan", "sign-pattern criterion over a field file");
    scan->add_option("file", file, "field record file")->required();
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_flag("--json", json, "machine output");

    auto* cm = app.add_subcommand("cm-build", "CM certificate for a field record");
    cm->add_option("file", file, "field record file")->required();
    cm->add_option("--disc", disc, "select record by discriminant");
    cm->add_option("--eps", eps, "comma-separated sign pattern, e.g. +,+,-,+,+");

    auto* demo = app.add_subcommand("elliptic-demo", "Fermat elliptic period identity check");
    demo->add_option("--digits", digits, "agreement digits (1..12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) {
            if (vec.empty() && preset.empty())
                throw DomainError("bad-vector", "provide a point or --preset");
            return cmd_classify(vec, preset, json);
        }
        if (embed->parsed()) return cmd_embed(vec, exact, json);
        if (scan->parsed()) return cmd_scan(file, jobs, json);
        if (cm->parsed()) return cmd_cm_build(file, disc, eps);
        if (demo->parsed()) return cmd_elliptic(digits);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
