#include "ortho/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <utility>

#include "CLI11.hpp"

#include "ortho/maximizer.hpp"
#include "ortho/metrics.hpp"
#include "ortho/schlafli.hpp"
#include "ortho/volume.hpp"
#include "ortho/ortho2d.hpp"

namespace ortho {

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr std::uint64_t kDefaultSeed = 1;

// Minimal ordered JSON writer. Numbers go out with 17 significant digits so
// they re-parse to the same 64-bit value; non-finite values become null.
std::string jnum(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string jint(long long v) { return std::to_string(v); }

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
    return out;
}

struct JsonObject {
    std::string body;

    void field(const std::string& key, const std::string& raw_value) {
        if (!body.empty()) body += ',';
        body += jstr(key) + ":" + raw_value;
    }
    std::string str() const { return "{" + body + "}"; }
};

std::string record(const std::string& command, const std::string& params_json,
                   const std::string& payload_json,
                   const std::vector<std::string>& warnings) {
    JsonObject rec;
    rec.field("schema_version", jstr(kSchemaVersion));
    rec.field("command", jstr(command));
    rec.field("params", params_json);
    rec.field("payload", payload_json);
    std::string warn = "[";
    for (std::size_t i = 0; i < warnings.size(); ++i) {
        if (i) warn += ',';
        warn += jstr(warnings[i]);
    }
    warn += ']';
    rec.field("warnings", warn);
    return rec.str() + "\n";
}

std::string params_json(const OrthoschemeParams& p) {
    JsonObject o;
    o.field("h", jnum(p.h));
    o.field("r", jnum(p.r));
    o.field("theta", jnum(p.theta));
    return o.str();
}

std::string edge_json(const Edge& e) {
    JsonObject o;
    o.field("value", jnum(e.length));
    o.field("kind", jstr(to_string(e.kind)));
    return o.str();
}

std::uint64_t default_seed(std::vector<std::string>& warnings) {
    const char* env = std::getenv("ORTHO_SEED");
    if (env == nullptr) return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        warnings.push_back("ORTHO_SEED is not an unsigned integer; using default seed");
        return kDefaultSeed;
    }
    return v;
}

struct CommonOpts {
    double h = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double theta_deg = 0.0;
    CLI::Option* theta_opt = nullptr;
    CLI::Option* theta_deg_opt = nullptr;

    double resolved_theta() const {
        if (theta_deg_opt->count() > 0) return theta_deg * std::numbers::pi / 180.0;
        return theta;
    }
};

void add_theta(CLI::App* cmd, CommonOpts& o) {
    o.theta_opt = cmd->add_option("--theta", o.theta, "angle at v2 in radians");
    o.theta_deg_opt =
        cmd->add_option("--theta-deg", o.theta_deg, "angle at v2 in degrees");
    o.theta_opt->excludes(o.theta_deg_opt);
    o.theta_deg_opt->excludes(o.theta_opt);
}

void require_theta(const CommonOpts& o) {
    if (o.theta_opt->count() == 0 && o.theta_deg_opt->count() == 0)
        throw CLI::RequiredError("--theta (or --theta-deg)");
}

std::string maximizer_json(const MaximizerResult& m) {
    JsonObject o;
    o.field("h_star", jnum(m.h_star));
    o.field("regime_at_max", jstr(to_string(m.regime_at_max)));
    o.field("residual", jnum(m.residual));
    o.field("bracket", "[" + jnum(m.bracket_lo) + "," + jnum(m.bracket_hi) + "]");
    o.field("iterations", jint(m.iterations));
    o.field("boundary_max", m.boundary_max ? "true" : "false");
    return o.str();
}

std::string sweep_row_json(const SweepRow& row) {
    JsonObject o;
    o.field("h", jnum(row.h));
    o.field("regime", jstr(to_string(row.regime)));
    o.field("dv_dh", jnum(row.dv_dh));
    o.field("volume", jnum(row.volume));
    o.field("method", jstr(row.method));
    o.field("error", jnum(row.error));
    o.field("note", jstr(row.note));
    return o.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "h,regime,dv_dh,volume,method,error\n";
    char buf[128];
    for (const SweepRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%s,%.17g,%.17g,%s,%.17g\n", row.h,
                      to_string(row.regime), row.dv_dh, row.volume, row.method.c_str(),
                      row.error);
        out += buf;
    }
    return out;
}

void emit(const std::string& text, const std::string& out_file, std::ostream& out) {
    if (out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw domain_error("cannot open output file: " + out_file);
    f << text;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperbolic complete orthoscheme toolkit"};
    // long-only help so the single-letter geometry flags stay available
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    CommonOpts classify_o, metrics_o, dvdh_o, volume_o, maximize_o, sweep_o;

    auto* c_classify = app.add_subcommand("classify", "combinatorial type of R(h,r,theta)");
    c_classify->add_option("--h", classify_o.h, "height")->required();
    c_classify->add_option("--r", classify_o.r, "base length")->required();
    add_theta(c_classify, classify_o);

    auto* c_metrics = app.add_subcommand("metrics", "edge lengths and dihedral angles");
    c_metrics->add_option("--h", metrics_o.h, "height")->required();
    c_metrics->add_option("--r", metrics_o.r, "base length")->required();
    add_theta(c_metrics, metrics_o);

    auto* c_dvdh = app.add_subcommand("dvdh", "analytic dV/dh with its components");
    c_dvdh->add_option("--h", dvdh_o.h, "height")->required();
    c_dvdh->add_option("--r", dvdh_o.r, "base length")->required();
    add_theta(c_dvdh, dvdh_o);

    std::string vol_method = "schlafli";
    long long vol_samples = 1000000;
    std::uint64_t vol_seed = 0;
    auto* c_volume = app.add_subcommand("volume", "hyperbolic volume of R(h,r,theta)");
    c_volume->add_option("--h", volume_o.h, "height")->required();
    c_volume->add_option("--r", volume_o.r, "base length")->required();
    add_theta(c_volume, volume_o);
    c_volume->add_option("--method", vol_method, "schlafli or montecarlo")
        ->check(CLI::IsMember({"schlafli", "montecarlo"}));
    c_volume->add_option("--samples", vol_samples, "Monte-Carlo sample count");
    auto* seed_opt = c_volume->add_option("--seed", vol_seed, "Monte-Carlo seed");

    bool max_verify = false;
    auto* c_maximize = app.add_subcommand("maximize", "volume-maximizing height");
    c_maximize->add_option("--r", maximize_o.r, "base length")->required();
    add_theta(c_maximize, maximize_o);
    c_maximize->add_flag("--verify", max_verify,
                         "also run uniqueness and Lambert-decrease scans");

    double h_min = 0.0, h_max = 0.0;
    int steps = 0;
    std::string format = "csv", out_file;
    auto* c_sweep = app.add_subcommand("sweep", "tabulate the family over an h grid");
    c_sweep->add_option("--r", sweep_o.r, "base length")->required();
    add_theta(c_sweep, sweep_o);
    c_sweep->add_option("--h-min", h_min, "grid start")->required();
    c_sweep->add_option("--h-max", h_max, "grid end")->required();
    c_sweep->add_option("--steps", steps, "grid size")->required();
    c_sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    c_sweep->add_option("--out", out_file, "write to file instead of stdout");

    double a2_h = 0.0, a2_r = 0.0;
    auto* c_area2d = app.add_subcommand("area2d", "two-dimensional orthoscheme area");
    c_area2d->add_option("--h", a2_h, "height")->required();
    c_area2d->add_option("--r", a2_r, "base length")->required();

    std::vector<std::string> argv_copy(args);
    try {
        std::vector<const char*> argv;
        argv.push_back("ortho");
        for (const std::string& a : argv_copy) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        const std::pair<CLI::App*, CommonOpts*> themed[] = {
            {c_classify, &classify_o}, {c_metrics, &metrics_o}, {c_dvdh, &dvdh_o},
            {c_volume, &volume_o},     {c_maximize, &maximize_o}, {c_sweep, &sweep_o}};
        for (const auto& [sub, opts] : themed)
            if (sub->parsed()) require_theta(*opts);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 64;
    }

    std::vector<std::string> warnings;
    try {
        if (c_classify->parsed()) {
            const OrthoschemeParams p{classify_o.h, classify_o.r,
                                      classify_o.resolved_theta()};
            const CombinatorialType t = classify(p);
            const OrthoschemeGeometry g = build(p);
            JsonObject payload;
            payload.field("type", jstr(to_string(t)));
            payload.field("lambert_threshold", jnum(lambert_threshold(p.r)));
            payload.field("ideal_apex", g.ideal_apex ? "true" : "false");
            out << record("classify", params_json(p), payload.str(), warnings);
        } else if (c_metrics->parsed()) {
            const OrthoschemeParams p{metrics_o.h, metrics_o.r,
                                      metrics_o.resolved_theta()};
            const MetricData m = metric_data(build(p));
            JsonObject lengths;
            lengths.field("l01", edge_json(m.l01));
            lengths.field("l02", edge_json(m.l02));
            lengths.field("l03", edge_json(m.l03));
            lengths.field("l12", edge_json(m.l12));
            lengths.field("l13", edge_json(m.l13));
            lengths.field("l23", edge_json(m.l23));
            JsonObject angles;
            angles.field("theta01", jnum(m.theta01));
            angles.field("theta02", jnum(m.theta02));
            angles.field("theta03", jnum(m.theta03));
            angles.field("theta12", jnum(m.theta12));
            angles.field("theta13", jnum(m.theta13));
            angles.field("theta23", jnum(m.theta23));
            JsonObject payload;
            payload.field("regime", jstr(to_string(classify(p))));
            payload.field("lengths", lengths.str());
            payload.field("angles", angles.str());
            out << record("metrics", params_json(p), payload.str(), warnings);
        } else if (c_dvdh->parsed()) {
            const OrthoschemeParams p{dvdh_o.h, dvdh_o.r, dvdh_o.resolved_theta()};
            const DerivativeReport rep = dV_dh(p);
            JsonObject payload;
            payload.field("h", jnum(rep.h));
            payload.field("regime", jstr(to_string(rep.regime)));
            payload.field("dv_dh", jnum(rep.dV_dh));
            payload.field("l03", jnum(rep.l03));
            payload.field("l01", jnum(rep.l01));
            payload.field("dtheta12_dh", jnum(rep.dtheta12_dh));
            payload.field("dtheta23_dh", jnum(rep.dtheta23_dh));
            out << record("dvdh", params_json(p), payload.str(), warnings);
        } else if (c_volume->parsed()) {
            const OrthoschemeParams p{volume_o.h, volume_o.r,
                                      volume_o.resolved_theta()};
            JsonObject payload;
            if (vol_method == "schlafli") {
                const VolumeEstimate est = volume_schlafli(p);
                payload.field("value", jnum(est.value));
                payload.field("method", jstr("schlafli"));
                payload.field("error", jnum(est.error));
                payload.field("evaluations", jint(est.count));
                payload.field("tail_cutoff", jnum(est.tail_cutoff));
                payload.field("tail_bound", jnum(est.tail_bound));
            } else {
                const std::uint64_t seed =
                    seed_opt->count() > 0 ? vol_seed : default_seed(warnings);
                const VolumeEstimate est = volume_montecarlo(p, vol_samples, seed);
                payload.field("value", jnum(est.value));
                payload.field("method", jstr("montecarlo"));
                payload.field("error", jnum(est.error));
                payload.field("samples", jint(est.count));
                payload.field("seed", std::to_string(est.seed));
            }
            out << record("volume", params_json(p), payload.str(), warnings);
        } else if (c_maximize->parsed()) {
            const double theta = maximize_o.resolved_theta();
            const MaximizerResult m = find_max(maximize_o.r, theta);
            JsonObject payload;
            payload.field("h_star", jnum(m.h_star));
            payload.field("regime_at_max", jstr(to_string(m.regime_at_max)));
            payload.field("residual", jnum(m.residual));
            payload.field("bracket", "[" + jnum(m.bracket_lo) + "," + jnum(m.bracket_hi) + "]");
            payload.field("iterations", jint(m.iterations));
            payload.field("boundary_max", m.boundary_max ? "true" : "false");
            if (max_verify) {
                const UniquenessReport u = verify_uniqueness(maximize_o.r, theta, 10000);
                JsonObject uj;
                uj.field("scan_lo", jnum(u.scan_lo));
                uj.field("scan_hi", jnum(u.scan_hi));
                uj.field("sign_changes", jint(u.sign_changes));
                uj.field("boundary_sign_change", u.boundary_sign_change ? "true" : "false");
                uj.field("total_changes", jint(u.total_changes));
                uj.field("g_sign_changes", jint(u.g_sign_changes));
                uj.field("ok", u.ok ? "true" : "false");
                payload.field("uniqueness", uj.str());
                if (maximize_o.r > 1.0 + kClassEps) {
                    const LambertDecreaseReport l =
                        verify_lambert_decrease(maximize_o.r, theta, 100);
                    JsonObject lj;
                    lj.field("scan_lo", jnum(l.scan_lo));
                    lj.field("scan_hi", jnum(l.scan_hi));
                    lj.field("samples", jint(l.samples));
                    lj.field("violations", jint(l.violations));
                    lj.field("max_dv_dh", jnum(l.max_dv_dh));
                    lj.field("ok", l.ok ? "true" : "false");
                    payload.field("lambert_decrease", lj.str());
                } else {
                    payload.field("lambert_decrease", "null");
                }
            }
            JsonObject pj;
            pj.field("r", jnum(maximize_o.r));
            pj.field("theta", jnum(theta));
            out << record("maximize", pj.str(), payload.str(), warnings);
        } else if (c_sweep->parsed()) {
            const double theta = sweep_o.resolved_theta();
            if (steps < 2) throw domain_error("--steps must be at least 2");
            if (!(h_max > h_min)) throw domain_error("--h-max must exceed --h-min");
            std::vector<double> grid(static_cast<std::size_t>(steps));
            for (int i = 0; i < steps; ++i)
                grid[static_cast<std::size_t>(i)] =
                    h_min + (h_max - h_min) * i / (steps - 1);
            const std::uint64_t seed = default_seed(warnings);
            const std::vector<SweepRow> rows = sweep(sweep_o.r, theta, grid, 100000, seed);
            if (format == "csv") {
                emit(sweep_csv(rows), out_file, out);
            } else {
                std::string rows_json = "[";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    if (i) rows_json += ',';
                    rows_json += sweep_row_json(rows[i]);
                }
                rows_json += ']';
                JsonObject payload;
                payload.field("rows", rows_json);
                JsonObject pj;
                pj.field("r", jnum(sweep_o.r));
                pj.field("theta", jnum(theta));
                pj.field("h_min", jnum(h_min));
                pj.field("h_max", jnum(h_max));
                pj.field("steps", jint(steps));
                emit(record("sweep", pj.str(), payload.str(), warnings), out_file, out);
            }
        } else if (c_area2d->parsed()) {
            const Ortho2DParams p{a2_h, a2_r};
            const AreaReport rep = area(p);
            const MaxAreaReport mx = max_area(p.r);
            std::string angles = "[";
            for (std::size_t i = 0; i < rep.angles.size(); ++i) {
                if (i) angles += ',';
                angles += jnum(rep.angles[i]);
            }
            angles += ']';
            JsonObject mj;
            mj.field("h_lo", jnum(mx.h_lo));
            mj.field("h_hi", jnum(mx.h_hi));
            mj.field("value", jnum(mx.value));
            mj.field("plateau", mx.plateau ? "true" : "false");
            JsonObject payload;
            payload.field("area", jnum(rep.area));
            payload.field("shape", jstr(to_string(rep.shape)));
            payload.field("angles", angles);
            payload.field("max_area", mj.str());
            JsonObject pj;
            pj.field("h", jnum(p.h));
            pj.field("r", jnum(p.r));
            out << record("area2d", pj.str(), payload.str(), warnings);
        }
    } catch (const domain_error& e) {
        err << "{\"error\":2,\"detail\":" << jstr(e.what()) << "}\n";
        return 2;
    } catch (const regime_error& e) {
        err << "{\"error\":3,\"detail\":" << jstr(e.what()) << "}\n";
        return 3;
    }
    return 0;
}

} // namespace ortho
