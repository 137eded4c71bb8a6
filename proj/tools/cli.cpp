#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qmf/qmf.hpp"

namespace qmf::cli {

namespace {

struct Config {
    std::string builtin = "haar";
    std::string filters;
    std::string vector = "p=0";
    int level = 3;
    std::string engine = "operator";
    double tol = 0.0;  // 0 selects the subcommand default
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 1;

    // packets
    std::string sweep;
    int jmax = 8;
    std::string dump;

    // reconstruct
    std::string signal;
    int depth = 5;
    int length = 16;
    std::string tree_out;

    // demo
    std::string demo;
};

/// Raised for bad configuration: unknown builtin, unreadable file, bad spec.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double tol_or(const Config& c, double fallback) { return c.tol > 0.0 ? c.tol : fallback; }

FilterSystem load_system(const Config& c) {
    try {
        return c.filters.empty() ? builtin(c.builtin) : load_filters(c.filters);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

LaurentPoly load_vector(const std::string& spec) {
    try {
        if (spec.rfind("p=", 0) == 0) {
            std::size_t used = 0;
            const Degree p = std::stoll(spec.substr(2), &used);
            if (used != spec.size() - 2) throw std::invalid_argument("bad basis index in '" + spec + "'");
            return basis(p);
        }
        std::ifstream in(spec);
        if (!in) throw std::runtime_error("cannot open vector file " + spec);
        const Json j = Json::parse(in);
        return j.is_array() ? poly_from_json(j) : signal_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

/// Unit-normalizes f for probabilistic output, warning when it had to.
LaurentPoly normalized(const LaurentPoly& f, std::ostream& err) {
    const double n = f.norm();
    if (n == 0.0) throw UsageError("the zero vector has no measure");
    if (std::abs(n - 1.0) > 1e-12) {
        err << "warning: vector has norm " << n << "; normalizing to 1\n";
        return f * Complex(1.0 / n);
    }
    return f;
}

Signal random_signal(std::mt19937_64& rng, int length) {
    std::normal_distribution<double> g;
    std::uniform_int_distribution<Degree> start(-length, length);
    LaurentPoly::Map m;
    const Degree s = start(rng);
    for (int i = 0; i < length; ++i) m.emplace(s + i, Complex(g(rng), g(rng)));
    return LaurentPoly(std::move(m));
}

void emit(const Config& c, std::ostream& out, const std::string& text, const std::string& summary) {
    if (c.out.empty() || c.out == "-") {
        out << text;
        return;
    }
    write_text(c.out, text);
    out << summary;
}

std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << v;
    return os.str();
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Config& c, std::ostream& out) {
    const FilterSystem fs = load_system(c);
    const ValidationReport r = validate(fs, tol_or(c, kDefaultTolerance));
    if (c.format == "json") {
        Json j = report_to_json(r);
        j["N"] = fs.N;
        out << j.dump(2) << '\n';
    } else {
        out << "N = " << fs.N << ", " << fs.filters.size() << " filters\n"
            << "max isometry defect:     " << sci(r.max_isometry_defect) << '\n'
            << "max completeness defect: " << sci(r.max_completeness_defect) << '\n'
            << "result: " << (r.passed ? "PASS" : "FAIL") << '\n';
    }
    return r.passed ? kExitOk : kExitFailure;
}

// ----------------------------------------------------------------- measure

MeasureTable table_for(const FilterSystem& fs, const LaurentPoly& f, const std::string& vec, int k, Engine e) {
    switch (e) {
        case Engine::Operator:
        case Engine::Spectral:
            return measure_table(fs, f, k, e, vec);
        case Engine::Packet: {
            if (vec.rfind("p=", 0) != 0) throw UsageError("the packet engine needs a basis vector p=<index>");
            if (!is_haar(fs)) throw UsageError("the packet engine needs the Haar system");
            return packet_measure_table(fs, std::stoll(vec.substr(2)), k);
        }
        case Engine::Product: {
            const ProductCheck pc = product_check(fs, f, k);
            if (!pc.eigen.is_eigen) throw std::runtime_error("vector is not a joint eigenvector; no product measure");
            MeasureTable t = product_table(ProductSpec(pc.probabilities), k);
            t.f_description = vec;
            return t;
        }
    }
    throw std::logic_error("unreachable engine");
}

int cmd_measure(const Config& c, std::ostream& out, std::ostream& err) {
    const FilterSystem fs = load_system(c);
    const LaurentPoly f = normalized(load_vector(c.vector), err);
    if (c.level < 0) throw UsageError("--level must be >= 0");

    if (c.engine == "both") {
        const MeasureTable a = measure_table(fs, f, c.level, Engine::Operator, c.vector);
        const MeasureTable b = measure_table(fs, f, c.level, Engine::Spectral, c.vector);
        double cross = 0.0;
        for (std::size_t i = 0; i < a.values.size(); ++i) cross = std::max(cross, std::abs(a.values[i] - b.values[i]));
        const double tol = tol_or(c, kDefaultTolerance);
        std::string text;
        if (c.format == "json") {
            Json j = {{"operator", table_to_json(a)}, {"spectral", table_to_json(b)}, {"max_cross_defect", cross}};
            text = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << std::setprecision(17) << "word,left,operator,spectral\n";
            for (std::size_t i = 0; i < a.values.size(); ++i) {
                const Word w = Word::from_index(a.N, a.level, i);
                os << w.to_string() << ',' << to_string(interval(a.N, w).numerator()) << '/'
                   << to_string(interval(a.N, w).denominator()) << ',' << a.values[i] << ','
                   << b.values[i] << '\n';
            }
            text = os.str();
        }
        emit(c, out, text, "wrote " + std::to_string(a.values.size()) + " cells to " + c.out + "\n");
        err << "max cross-defect (operator vs spectral): " << sci(cross) << '\n';
        return cross <= tol ? kExitOk : kExitFailure;
    }

    Engine e{};
    try {
        e = parse_engine(c.engine);
    } catch (const std::exception& ex) {
        throw UsageError(ex.what());
    }
    const MeasureTable t = table_for(fs, f, c.vector, c.level, e);
    const DensityStats d = density_stats(t);
    std::string text;
    if (c.format == "json") {
        Json j = table_to_json(t);
        j["density"] = {{"max", d.max_density}, {"min", d.min_density}, {"histogram", d.histogram}};
        text = j.dump(2) + "\n";
    } else {
        text = table_to_csv(t);
    }
    std::ostringstream summary;
    summary << "wrote " << t.values.size() << " cells to " << c.out << "; total = " << t.total()
            << "; density max = " << d.max_density << ", min = " << d.min_density << '\n';
    emit(c, out, text, summary.str());
    return kExitOk;
}

int cmd_cdf(const Config& c, std::ostream& out, std::ostream& err) {
    const FilterSystem fs = load_system(c);
    const LaurentPoly f = normalized(load_vector(c.vector), err);
    Engine e{};
    try {
        e = parse_engine(c.engine);
    } catch (const std::exception& ex) {
        throw UsageError(ex.what());
    }
    const MeasureTable t = table_for(fs, f, c.vector, c.level, e);
    const std::string text = c.format == "json" ? cdf_to_json(t).dump(2) + "\n" : cdf_to_csv(t);
    emit(c, out, text, "wrote CDF with " + std::to_string(t.values.size()) + " points to " + c.out + "\n");
    return kExitOk;
}

// ----------------------------------------------------------------- packets

int parse_sweep_level(const std::string& s) {
    const std::string v = s.rfind("k=", 0) == 0 ? s.substr(2) : s;
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size() || k < 1 || k > 10) throw UsageError("--sweep expects k=<1..10>");
    return k;
}

int cmd_packets(const Config& c, std::ostream& out) {
    if (c.sweep.empty() && c.dump.empty()) throw UsageError("packets needs --sweep or --dump");
    int rc = kExitOk;
    if (!c.dump.empty()) {
        const auto colon = c.dump.find(':');
        if (colon == std::string::npos) throw UsageError("--dump expects <n>:<k>");
        PacketIndex n;
        try {
            n = PacketIndex::from_value(2, std::stoull(c.dump.substr(0, colon)), std::stoi(c.dump.substr(colon + 1)));
        } catch (const std::exception& e) {
            throw UsageError(std::string("--dump: ") + e.what());
        }
        emit(c, out, step_function_to_csv(haar_packet(n)), "wrote packet " + c.dump + " to " + c.out + "\n");
    }
    if (!c.sweep.empty()) {
        const int k = parse_sweep_level(c.sweep);
        const PacketSweep s = packet_sweep(k, c.jmax);
        const double tol = tol_or(c, 1e-10);
        const bool ok = s.max_identity_defect <= tol && s.max_measure_defect <= 1e-9;
        out << "packet sweep k <= " << k << ", |j| <= " << c.jmax << ": " << s.cases << " cases\n"
            << "max coefficient identity defect: " << sci(s.max_identity_defect) << '\n'
            << "max mu_p packet vs basis defect: " << sci(s.max_measure_defect) << '\n'
            << "result: " << (ok ? "PASS" : "FAIL") << '\n';
        if (!ok) rc = kExitFailure;
    }
    return rc;
}

// ------------------------------------------------------------- reconstruct

int cmd_reconstruct(const Config& c, std::ostream& out, std::ostream& err) {
    const FilterSystem fs = load_system(c);
    if (!validate(fs).passed) err << "warning: filter system does not validate; reconstruction will not be exact\n";
    if (c.depth < 0) throw UsageError("--depth must be >= 0");
    Signal xi;
    if (c.signal.empty()) {
        std::mt19937_64 rng(c.seed);
        xi = random_signal(rng, c.length);
    } else {
        try {
            xi = load_signal(c.signal);
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    const SubbandTree tree = analyze_tree(fs, xi, c.depth);
    const Signal back = synthesize_tree(fs, tree);
    const double defect = max_coeff_diff(back, xi);
    double energy = 0.0;
    for (const auto& leaf : tree.leaves()) energy += leaf.norm2();
    const double energy_defect = std::abs(energy - xi.norm2());
    if (c.tree_out == "-") {
        out << subband_tree_to_json(tree).dump(2) << '\n';
    } else if (!c.tree_out.empty()) {
        write_text(c.tree_out, subband_tree_to_json(tree).dump(2) + "\n");
    }
    const double tol = tol_or(c, 1e-10);
    out << "depth " << c.depth << ", " << tree.leaves().size() << " subbands\n"
        << "reconstruction defect: " << sci(defect) << '\n'
        << "energy defect:         " << sci(energy_defect) << '\n'
        << "result: " << (defect <= tol ? "PASS" : "FAIL") << '\n';
    return defect <= tol ? kExitOk : kExitFailure;
}

// -------------------------------------------------------------------- demo

class Checklist {
public:
    explicit Checklist(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& what, double value) {
        out_ << (ok ? "[pass] " : "[FAIL] ") << what << ": " << sci(value) << '\n';
        all_ = all_ && ok;
    }

    int exit_code() const { return all_ ? kExitOk : kExitFailure; }

private:
    std::ostream& out_;
    bool all_ = true;
};

double max_table_error(const MeasureTable& t, const std::function<double(const Word&)>& expected) {
    double e = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        e = std::max(e, std::abs(t.values[i] - expected(Word::from_index(t.N, t.level, i))));
    }
    return e;
}

void check_tables(Checklist& cl, const FilterSystem& fs, int levels, const std::string& name,
                  const std::function<double(const Word&)>& expected) {
    for (int k = 1; k <= levels; ++k) {
        for (Engine e : {Engine::Operator, Engine::Spectral}) {
            const MeasureTable t = measure_table(fs, basis(0), k, e, "p=0");
            const double err = max_table_error(t, expected);
            cl.check(err <= 1e-10, name + " table, level " + std::to_string(k) + ", " + to_string(e) + " engine", err);
        }
    }
}

void check_product_demo(Checklist& cl, const FilterSystem& fs, int k, const std::vector<double>& p) {
    const ProductCheck pc = product_check(fs, basis(0), k);
    double perr = 0.0;
    for (std::size_t i = 0; i < p.size() && i < pc.probabilities.size(); ++i) {
        perr = std::max(perr, std::abs(pc.probabilities[i] - p[i]));
    }
    const bool ok = pc.is_product && pc.probabilities.size() == p.size() && perr <= 1e-12;
    cl.check(ok, "e_0 is a joint eigenvector with the expected product weights, table defect", pc.max_defect);
}

int demo_haar(const Config& c, std::ostream& out) {
    Checklist cl(out);
    const FilterSystem fs = haar();
    const ValidationReport r = validate(fs);
    cl.check(r.passed, "Haar filters validate, isometry defect", r.max_isometry_defect);
    check_tables(cl, fs, c.level, "Lebesgue", [](const Word& a) { return std::ldexp(1.0, -static_cast<int>(a.length())); });
    check_product_demo(cl, fs, c.level, {0.5, 0.5});

    const PacketSweep s = packet_sweep(3, 8);
    cl.check(s.max_identity_defect <= 1e-10, "packet coefficient identity, k <= 3", s.max_identity_defect);
    cl.check(s.max_measure_defect <= 1e-9, "mu_p from packets vs filter coefficients", s.max_measure_defect);

    std::mt19937_64 rng(c.seed);
    double rec = 0.0, tw = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Signal xi = random_signal(rng, 16);
        rec = std::max(rec, reconstruction_defect(fs, xi, 5));
        tw = std::max(tw, intertwining_defect(fs, xi));
    }
    cl.check(rec <= 1e-10, "depth-5 perfect reconstruction on 10 random signals", rec);
    cl.check(tw <= 1e-12, "W S_0 = U W on 10 random signals", tw);
    return cl.exit_code();
}

int demo_cantor(const Config& c, std::ostream& out) {
    Checklist cl(out);
    const FilterSystem fs = cantor3();
    const ValidationReport r = validate(fs);
    cl.check(r.passed, "Cantor filters validate, isometry defect", r.max_isometry_defect);
    check_tables(cl, fs, c.level, "Cantor", [](const Word& a) {
        return is_cantor_word(a) ? std::ldexp(1.0, -static_cast<int>(a.length())) : 0.0;
    });

    const IfsSystem ifs = cantor_ifs();
    MeasureTable coarse = measure_table(fs, basis(0), 0, Engine::Operator);
    for (int k = 1; k <= c.level; ++k) {
        const MeasureTable fine = measure_table(fs, basis(0), k, Engine::Operator);
        const double d = self_similarity_defect(fine, coarse, ifs, {0.5, 0.5});
        cl.check(d <= 1e-10, "self-similarity mu = (mu o s0^-1 + mu o s1^-1)/2, level " + std::to_string(k), d);
        coarse = fine;
    }
    check_product_demo(cl, fs, c.level, {0.5, 0.0, 0.5});
    return cl.exit_code();
}

int demo_permutative(const Config& c, std::ostream& out) {
    Checklist cl(out);
    for (int N : {2, 3}) {
        const FilterSystem fs = permutative_shift(N);
        const std::string name = "permutative" + std::to_string(N);
        const ValidationReport r = validate(fs);
        cl.check(r.passed, name + " filters validate, isometry defect", r.max_isometry_defect);
        check_tables(cl, fs, c.level, name + " Dirac", [](const Word& a) {
            for (int d : a.digits()) {
                if (d != 0) return 0.0;
            }
            return 1.0;
        });
        std::vector<double> p(static_cast<std::size_t>(N), 0.0);
        p[0] = 1.0;
        check_product_demo(cl, fs, c.level, p);
    }
    return cl.exit_code();
}

int cmd_demo(const Config& c, std::ostream& out) {
    if (c.level < 1 || c.level > 10) throw UsageError("demo --level must be in 1..10");
    if (c.demo == "haar") return demo_haar(c, out);
    if (c.demo == "cantor") return demo_cantor(c, out);
    if (c.demo == "permutative") return demo_permutative(c, out);
    throw UsageError("unknown demo '" + c.demo + "'");
}

void add_filter_options(CLI::App* app, Config& c) {
    auto* b = app->add_option("--builtin", c.builtin, "haar | cantor3 | daubechies4 | permutative<N>")->capture_default_str();
    auto* f = app->add_option("--filters", c.filters, "filter-spec JSON file");
    b->excludes(f);
    f->excludes(b);
}

void add_measure_options(CLI::App* app, Config& c) {
    add_filter_options(app, c);
    app->add_option("--vector", c.vector, "p=<index> or a JSON vector file")->capture_default_str();
    app->add_option("--level", c.level, "interval level k")->capture_default_str();
    app->add_option("--engine", c.engine, "operator | spectral | both | product | packet")->capture_default_str();
    app->add_option("--tol", c.tol, "tolerance for cross-checks")->check(CLI::PositiveNumber);
    app->add_option("--format", c.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app->add_option("--out", c.out, "output file (default stdout)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Spectral measures of quadrature-mirror filter representations"};
    app.name("qmfm");
    app.require_subcommand(1);

    auto* validate_cmd = app.add_subcommand("validate", "check the filter unitarity conditions");
    add_filter_options(validate_cmd, c);
    validate_cmd->add_option("--tol", c.tol, "defect tolerance")->check(CLI::PositiveNumber);
    validate_cmd->add_option("--format", c.format, "text (default) | json");

    auto* measure_cmd = app.add_subcommand("measure", "table of mu_f on the level-k N-adic intervals");
    add_measure_options(measure_cmd, c);

    auto* cdf_cmd = app.add_subcommand("cdf", "cumulative distribution of mu_f at level k");
    add_measure_options(cdf_cmd, c);

    auto* packets_cmd = app.add_subcommand("packets", "Haar wavelet-packet identities and dumps");
    packets_cmd->add_option("--sweep", c.sweep, "k=<max level> for the full identity sweep");
    packets_cmd->add_option("--jmax", c.jmax, "translate range |j| <= jmax")->capture_default_str();
    packets_cmd->add_option("--dump", c.dump, "<n>:<k> writes w_n on the 2^-k grid as CSV");
    packets_cmd->add_option("--tol", c.tol, "identity tolerance")->check(CLI::PositiveNumber);
    packets_cmd->add_option("--out", c.out, "output file for --dump");

    auto* rec_cmd = app.add_subcommand("reconstruct", "subband analysis/synthesis round trip");
    add_filter_options(rec_cmd, c);
    rec_cmd->add_option("--signal", c.signal, "signal JSON {index: [re, im]}; random if omitted");
    rec_cmd->add_option("--depth", c.depth, "tree depth")->capture_default_str();
    rec_cmd->add_option("--length", c.length, "random signal length")->capture_default_str();
    rec_cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
    rec_cmd->add_option("--tree-out", c.tree_out, "write the subband tree as nested JSON");
    rec_cmd->add_option("--tol", c.tol, "reconstruction tolerance")->check(CLI::PositiveNumber);

    auto* demo_cmd = app.add_subcommand("demo", "run a worked example end to end");
    demo_cmd->add_option("name", c.demo, "haar | cantor | permutative")->required();
    demo_cmd->add_option("--level", c.level, "deepest level checked, 1..10 [6]");
    demo_cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (demo_cmd->parsed() && demo_cmd->count("--level") == 0) c.level = 6;

    try {
        if (validate_cmd->parsed()) return cmd_validate(c, out);
        if (measure_cmd->parsed()) return cmd_measure(c, out, err);
        if (cdf_cmd->parsed()) return cmd_cdf(c, out, err);
        if (packets_cmd->parsed()) return cmd_packets(c, out);
        if (rec_cmd->parsed()) return cmd_reconstruct(c, out, err);
        if (demo_cmd->parsed()) return cmd_demo(c, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace qmf::cli
