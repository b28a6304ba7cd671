#include "cli_app.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cforge/cretan.hpp"
#include "cforge/errors.hpp"
#include "cforge/formats.hpp"

namespace cforge::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string slurp(std::istream& in) {
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string load_input(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") return slurp(fallback);
    std::ifstream f(path);
    if (!f) {
        throw format_error("cannot open input file '" + path + "'");
    }
    return slurp(f);
}

void store_output(const std::string& path, std::ostream& fallback, const std::string& data) {
    if (path.empty() || path == "-") {
        fallback << data;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw format_error("cannot open output file '" + path + "'");
    }
    f << data;
}

bool env_wants_json() {
    const char* v = std::getenv("CRETAN_FORGE_JSON");
    return v != nullptr && std::string(v) == "1";
}

// Generator selection for order 4t: Paley when 4t-1 is prime, else Sylvester
// when 4t is a power of two.
std::optional<HadamardMatrix> generate_for_t(std::size_t t) {
    const std::size_t order = 4 * t;
    const std::size_t q = order - 1;
    if (is_prime(q) && q % 4 == 3) return paley_hadamard(q);
    if ((order & (order - 1)) == 0) {
        unsigned k = 0;
        for (std::size_t m = order; m > 1; m >>= 1) ++k;
        return sylvester(k);
    }
    return std::nullopt;
}

ordered_json roundtrip_json(const RoundTripReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "roundtrip";
    j["t"] = r.t;
    j["order"] = r.hadamard_order;
    j["cretan_order"] = r.cretan_order;
    ordered_json stages = ordered_json::array();
    for (const auto& s : r.stages) {
        stages.push_back(ordered_json{{"name", s.name}, {"detail", s.detail}});
    }
    j["stages"] = std::move(stages);
    j["y"] = r.y.str();
    j["omega"] = r.omega.str();
    j["omega_float"] = r.omega_float;
    j["det_sq"] = r.det_sq.str();
    j["det_float"] = r.det_float;
    j["omega_alt"] = r.omega_alt.str();
    j["det_alt_float"] = r.det_alt_float;
    j["barba"] = r.barba;
    j["det_to_barba"] = r.det_to_barba;
    j["final_equals_initial"] = r.final_equals_initial;
    j["pass"] = true;
    return j;
}

void roundtrip_text(const RoundTripReport& r, std::ostream& out) {
    out << "t " << r.t << "\n";
    out << "hadamard order " << r.hadamard_order << "\n";
    out << "cretan order " << r.cretan_order << "\n";
    for (const auto& s : r.stages) out << "stage " << s.name << ": " << s.detail << "\n";
    out << "y = " << r.y.str() << " (~ " << fmt(r.y.to_double()) << ")\n";
    out << "omega = " << r.omega.str() << " (~ " << fmt(r.omega_float) << ")\n";
    out << "det^2 = " << r.det_sq.str() << "\n";
    out << "|det| ~ " << fmt(r.det_float) << "\n";
    out << "alt omega = " << r.omega_alt.str() << " (~ " << fmt(r.omega_alt.to_double())
        << "), |det| ~ " << fmt(r.det_alt_float) << "\n";
    out << "barba(" << r.cretan_order << ") = " << fmt(r.barba) << "\n";
    out << "det/barba = " << fmt(r.det_to_barba) << "\n";
    out << "final-equals-initial: " << (r.final_equals_initial ? "pass" : "fail") << "\n";
}

struct ScanRow {
    std::size_t t = 0;
    std::size_t order = 0;
    bool constructible = false;
    std::optional<RoundTripReport> report;
};

int cmd_verify(const std::string& text, bool json, std::ostream& out) {
    const io::FileKind kind = io::detect(text);
    ordered_json j;
    j["schema"] = 1;
    j["command"] = "verify";
    std::string human;
    switch (kind) {
    case io::FileKind::sign_grid: {
        const std::size_t n = verify_hadamard(io::read_sign_grid(text));
        j["kind"] = "hadamard";
        j["order"] = n;
        human = "hadamard matrix of order " + std::to_string(n) + ": verified (gram = " +
                std::to_string(n) + "*I)";
        break;
    }
    case io::FileKind::incidence: {
        const Design d = io::read_incidence(text);
        j["kind"] = "sbibd";
        j["v"] = d.v();
        j["k"] = d.k();
        j["lambda"] = d.lambda();
        j["size_convention"] = d.follows_size_convention();
        human = "sbibd (" + std::to_string(d.v()) + "," + std::to_string(d.k()) + "," +
                std::to_string(d.lambda()) + "): verified; size convention " +
                (d.follows_size_convention() ? "holds" : "broken");
        break;
    }
    case io::FileKind::cretan_json: {
        const CretanMatrix s = io::read_cretan_json(text);
        const WeightReport w = weight_and_det(s);
        j["kind"] = "cretan";
        j["order"] = s.order();
        j["y"] = s.y().str();
        j["omega"] = s.omega().str();
        j["det_float"] = w.det_float;
        human = "cretan matrix of order " + std::to_string(s.order()) + ": verified; y = " +
                s.y().str() + "; omega = " + s.omega().str() + "; |det| ~ " + fmt(w.det_float);
        break;
    }
    case io::FileKind::matrix_json: {
        const ExactMatrix m = io::read_matrix_json(text);
        const ExactMatrix g = gram(m);
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t c = 0; c < g.order(); ++c) {
                if (i != c && !g(i, c).is_zero()) {
                    throw verify_error("characteristic equation violated at rows (" +
                                       std::to_string(i) + "," + std::to_string(c) + ")");
                }
            }
        }
        const QuadNum omega = g(0, 0);
        for (std::size_t i = 1; i < g.order(); ++i) {
            if (g(i, i) != omega) {
                throw verify_error("radius equation violated at row " + std::to_string(i));
            }
        }
        j["kind"] = "matrix";
        j["order"] = m.order();
        j["omega"] = omega.str();
        human = "exact matrix of order " + std::to_string(m.order()) +
                ": verified; gram = omega*I with omega = " + omega.str();
        break;
    }
    case io::FileKind::pgm:
        throw format_error("nothing to verify in a PGM portrait");
    }
    j["pass"] = true;
    if (json) {
        out << j.dump(2) << "\n";
    } else {
        out << human << "\npass\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact Hadamard / SBIBD / 2-level Cretan matrix toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --json trail a subcommand
    bool json = env_wants_json();
    app.add_flag("--json", json, "emit reports as JSON");

    std::string in_path, out_path;
    std::size_t order = 0;
    std::string method;
    std::string convention = "x-on-zeros";
    std::size_t t_value = 0;
    std::size_t t_max = 0;
    unsigned scale = 1;

    auto* gen = app.add_subcommand("gen-hadamard", "construct a Hadamard matrix");
    gen->add_option("--order", order, "matrix order")->required();
    gen->add_option("--method", method, "sylvester | paley")
        ->required()
        ->check(CLI::IsMember({"sylvester", "paley"}));
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* norm = app.add_subcommand("normalize", "normalize a Hadamard matrix");
    norm->add_option("--in", in_path, "input file (default stdin)");
    norm->add_option("--out", out_path, "output file (default stdout)");

    auto* tosb = app.add_subcommand("to-sbibd", "extract the core design of a Hadamard matrix");
    tosb->add_option("--in", in_path, "input file (default stdin)");
    tosb->add_option("--out", out_path, "output file (default stdout)");

    auto* comp = app.add_subcommand("complement", "complement an SBIBD");
    comp->add_option("--in", in_path, "input file (default stdin)");
    comp->add_option("--out", out_path, "output file (default stdout)");

    auto* tocr = app.add_subcommand("to-cretan", "solve levels over an SBIBD");
    tocr->add_option("--in", in_path, "input file (default stdin)");
    tocr->add_option("--out", out_path, "output file (default stdout)");
    tocr->add_option("--convention", convention, "x-on-ones | x-on-zeros (default)")
        ->check(CLI::IsMember({"x-on-ones", "x-on-zeros"}));

    auto* toin = app.add_subcommand("to-incidence", "read the 1-cells of a Cretan matrix");
    toin->add_option("--in", in_path, "input file (default stdin)");
    toin->add_option("--out", out_path, "output file (default stdout)");

    auto* toh = app.add_subcommand("to-hadamard", "border an SBIBD(4t-1,2t-1,t-1)");
    toh->add_option("--in", in_path, "input file (default stdin)");
    toh->add_option("--out", out_path, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "verify any supported input file");
    ver->add_option("--in", in_path, "input file (default stdin)");

    auto* bnd = app.add_subcommand("bounds", "determinant bounds at an order");
    bnd->add_option("--order", order, "matrix order")->required();

    auto* rt = app.add_subcommand("roundtrip", "Hadamard -> Mersenne -> Hadamard pipeline");
    auto* rt_t = rt->add_option("--t", t_value, "use a generated matrix of order 4t");
    auto* rt_in = rt->add_option("--in", in_path, "use a Hadamard matrix from a file");
    rt_t->excludes(rt_in);

    auto* sc = app.add_subcommand("scan", "round trips for all t up to a limit");
    sc->add_option("--t-max", t_max, "largest t")->required();

    auto* ren = app.add_subcommand("render", "PGM portrait of a matrix file");
    ren->add_option("--in", in_path, "input file (default stdin)");
    ren->add_option("--out", out_path, "output file (default stdout)");
    ren->add_option("--scale", scale, "pixels per entry (default 1)")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            HadamardMatrix h = [&]() {
                if (method == "sylvester") {
                    if (order == 0 || (order & (order - 1)) != 0) {
                        throw math_error("sylvester order must be a power of two, got " +
                                         std::to_string(order));
                    }
                    unsigned k = 0;
                    for (std::size_t m = order; m > 1; m >>= 1) ++k;
                    return sylvester(k);
                }
                if (order < 4) {
                    throw math_error("paley order must be q+1 >= 4");
                }
                return paley_hadamard(order - 1);
            }();
            store_output(out_path, out, io::write_sign_grid(h));
            return 0;
        }
        if (norm->parsed()) {
            const auto h = hadamard_from_entries(io::read_sign_grid(load_input(in_path, in)));
            store_output(out_path, out, io::write_sign_grid(normalize(h)));
            return 0;
        }
        if (tosb->parsed()) {
            const auto h = hadamard_from_entries(io::read_sign_grid(load_input(in_path, in)));
            store_output(out_path, out, io::write_incidence(core_to_sbibd(h)));
            return 0;
        }
        if (comp->parsed()) {
            const Design d = io::read_incidence(load_input(in_path, in));
            store_output(out_path, out, io::write_incidence(d.complement()));
            return 0;
        }
        if (tocr->parsed()) {
            const Design d = io::read_incidence(load_input(in_path, in));
            const CretanMatrix s = cretan_from_sbibd(d, convention_from_string(convention));
            store_output(out_path, out, io::write_cretan_json(s));
            return 0;
        }
        if (toin->parsed()) {
            const CretanMatrix s = io::read_cretan_json(load_input(in_path, in));
            store_output(out_path, out, io::write_incidence(cretan_to_incidence(s)));
            return 0;
        }
        if (toh->parsed()) {
            const Design d = io::read_incidence(load_input(in_path, in));
            store_output(out_path, out, io::write_sign_grid(sbibd_to_hadamard(d)));
            return 0;
        }
        if (ver->parsed()) {
            return cmd_verify(load_input(in_path, in), json, out);
        }
        if (bnd->parsed()) {
            const DetBounds b = det_bounds(order);
            if (json) {
                ordered_json j;
                j["schema"] = 1;
                j["command"] = "bounds";
                j["order"] = order;
                j["hadamard"] = b.hadamard;
                if (b.barba) j["barba"] = *b.barba;
                if (b.wojtas) j["wojtas"] = *b.wojtas;
                out << j.dump(2) << "\n";
            } else {
                out << "order " << order << "\n";
                out << "hadamard " << fmt(b.hadamard) << "\n";
                if (b.barba) out << "barba " << fmt(*b.barba) << "\n";
                if (b.wojtas) out << "wojtas " << fmt(*b.wojtas) << "\n";
            }
            return 0;
        }
        if (rt->parsed()) {
            HadamardMatrix h = [&]() {
                if (rt_in->count() > 0) {
                    return hadamard_from_entries(io::read_sign_grid(load_input(in_path, in)));
                }
                if (t_value == 0) {
                    throw math_error("roundtrip needs --t or --in");
                }
                auto gen_h = generate_for_t(t_value);
                if (!gen_h) {
                    throw math_error("no generator for t = " + std::to_string(t_value) + " (" +
                                     std::to_string(4 * t_value - 1) + " composite, " +
                                     std::to_string(4 * t_value) + " not a power of two)");
                }
                return *gen_h;
            }();
            const RoundTripReport r = roundtrip(h);
            if (json) {
                out << roundtrip_json(r).dump(2) << "\n";
            } else {
                roundtrip_text(r, out);
            }
            return 0;
        }
        if (sc->parsed()) {
            if (t_max == 0) {
                throw math_error("scan needs --t-max >= 1");
            }
            std::vector<ScanRow> rows;
            for (std::size_t t = 1; t <= t_max; ++t) {
                ScanRow row;
                row.t = t;
                row.order = 4 * t;
                auto h = generate_for_t(t);
                if (h) {
                    row.constructible = true;
                    row.report = roundtrip(*h);
                }
                rows.push_back(std::move(row));
            }
            if (json) {
                ordered_json j;
                j["schema"] = 1;
                j["command"] = "scan";
                j["t_max"] = t_max;
                ordered_json arr = ordered_json::array();
                for (const auto& row : rows) {
                    ordered_json rj;
                    rj["t"] = row.t;
                    rj["order"] = row.order;
                    if (!row.constructible) {
                        rj["status"] = "no generator";
                    } else {
                        rj["status"] = "pass";
                        rj["y"] = row.report->y.str();
                        rj["omega"] = row.report->omega.str();
                        rj["omega_float"] = row.report->omega_float;
                        rj["det_float"] = row.report->det_float;
                        rj["det_to_barba"] = row.report->det_to_barba;
                    }
                    arr.push_back(std::move(rj));
                }
                j["rows"] = std::move(arr);
                out << j.dump(2) << "\n";
            } else {
                out << "t\torder\tstatus\ty\tomega\t|det|\tdet/barba\n";
                for (const auto& row : rows) {
                    out << row.t << "\t" << row.order << "\t";
                    if (!row.constructible) {
                        out << "no generator\n";
                        continue;
                    }
                    out << "pass\t" << row.report->y.str() << "\t" << row.report->omega.str()
                        << "\t" << fmt(row.report->det_float) << "\t"
                        << fmt(row.report->det_to_barba) << "\n";
                }
            }
            return 0;
        }
        if (ren->parsed()) {
            const ExactMatrix m = io::read_any_matrix(load_input(in_path, in));
            store_output(out_path, out, io::render_pgm(m, scale));
            return 0;
        }
    } catch (const format_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace cforge::cli
