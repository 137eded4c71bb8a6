#include "qmf/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace qmf {

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

Json complex_pair(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::invalid_argument("expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v + 0.0;  // prints -0 as 0
    return os.str();
}

std::string over_denominator(Int128 num, const NadicInterval& J) {
    return to_string(num) + "/" + to_string(J.denominator());
}

std::string left_string(const NadicInterval& J) { return over_denominator(J.numerator(), J); }
std::string right_string(const NadicInterval& J) { return over_denominator(J.numerator() + 1, J); }

}  // namespace

Json poly_to_json(const LaurentPoly& f) {
    Json out = Json::array();
    for (const auto& [k, c] : f.coeffs()) out.push_back(Json::array({k, c.real(), c.imag()}));
    return out;
}

LaurentPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of [degree, re, im]");
    LaurentPoly::Map m;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number() || !t[2].is_number()) {
            throw std::invalid_argument("polynomial term must be [degree, re, im]");
        }
        const auto k = t[0].get<Degree>();
        if (!m.emplace(k, Complex(t[1].get<double>(), t[2].get<double>())).second) {
            throw std::invalid_argument("repeated degree " + std::to_string(k));
        }
    }
    return LaurentPoly(std::move(m));
}

Json filters_to_json(const FilterSystem& fs) {
    Json filters = Json::array();
    for (const auto& m : fs.filters) filters.push_back(poly_to_json(m));
    return {{"N", fs.N}, {"filters", filters}};
}

FilterSystem filters_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("filters")) {
        throw std::invalid_argument("filter spec needs \"N\" and \"filters\"");
    }
    if (!j["N"].is_number_integer()) throw std::invalid_argument("\"N\" must be an integer");
    FilterSystem fs;
    fs.N = j["N"].get<int>();
    if (fs.N < 2) throw std::invalid_argument("\"N\" must be >= 2");
    for (const auto& m : j["filters"]) fs.filters.push_back(poly_from_json(m));
    if (fs.filters.size() != static_cast<std::size_t>(fs.N)) {
        throw std::invalid_argument("filter spec lists " + std::to_string(fs.filters.size()) + " filters for N = " +
                                    std::to_string(fs.N));
    }
    return fs;
}

FilterSystem load_filters(const std::string& path) { return filters_from_json(read_json_file(path)); }

Json signal_to_json(const Signal& xi) {
    Json out = Json::object();
    for (const auto& [k, c] : xi.coeffs()) out[std::to_string(k)] = complex_pair(c);
    return out;
}

Signal signal_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("signal must be an object of index -> [re, im]");
    LaurentPoly::Map m;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        Degree k = 0;
        try {
            k = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != key.size()) throw std::invalid_argument("bad signal index \"" + key + "\"");
        m.emplace(k, complex_from(value));
    }
    return LaurentPoly(std::move(m));
}

Signal load_signal(const std::string& path) { return signal_from_json(read_json_file(path)); }

Json interval_to_json(const NadicInterval& J) {
    return {{"N", J.base()},
            {"digits", J.digits().digits()},
            {"left", left_string(J)},
            {"width", over_denominator(1, J)}};
}

Json report_to_json(const ValidationReport& r) {
    return {{"passed", r.passed},
            {"max_isometry_defect", r.max_isometry_defect},
            {"max_completeness_defect", r.max_completeness_defect}};
}

std::string table_to_csv(const MeasureTable& t) {
    std::ostringstream os;
    os << "word,left,value\n";
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        const Word a = Word::from_index(t.N, t.level, i);
        os << a.to_string() << ',' << left_string(interval(t.N, a)) << ',' << fmt(t.values[i]) << '\n';
    }
    return os.str();
}

Json table_to_json(const MeasureTable& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        const Word a = Word::from_index(t.N, t.level, i);
        rows.push_back({{"interval", interval_to_json(interval(t.N, a))}, {"value", t.values[i]}});
    }
    return {{"N", t.N},
            {"level", t.level},
            {"engine", to_string(t.engine)},
            {"vector", t.f_description},
            {"total", t.total()},
            {"cells", rows}};
}

std::string cdf_to_csv(const MeasureTable& t) {
    std::ostringstream os;
    os << "right,cumulative\n";
    double acc = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        acc += t.values[i];
        os << right_string(interval(t.N, Word::from_index(t.N, t.level, i))) << ',' << fmt(acc) << '\n';
    }
    return os.str();
}

Json cdf_to_json(const MeasureTable& t) {
    Json rows = Json::array();
    double acc = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        acc += t.values[i];
        rows.push_back(
            {{"right", right_string(interval(t.N, Word::from_index(t.N, t.level, i)))}, {"cumulative", acc}});
    }
    return {{"N", t.N}, {"level", t.level}, {"cdf", rows}};
}

Json subband_tree_to_json(const SubbandTree& tree) {
    // Build bottom-up so each node can own its children.
    std::vector<Json> below;
    for (int d = tree.depth; d >= 0; --d) {
        const auto& level = tree.levels[static_cast<std::size_t>(d)];
        std::vector<Json> here;
        here.reserve(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) {
            Json node = {{"word", Word::from_index(tree.N, d, i).to_string()}, {"signal", signal_to_json(level[i])}};
            if (d < tree.depth) {
                Json kids = Json::array();
                for (int c = 0; c < tree.N; ++c) {
                    kids.push_back(std::move(below[i * static_cast<std::size_t>(tree.N) + static_cast<std::size_t>(c)]));
                }
                node["children"] = std::move(kids);
            }
            here.push_back(std::move(node));
        }
        below = std::move(here);
    }
    return below.front();
}

std::string step_function_to_csv(const StepFunction& g) {
    std::ostringstream os;
    os << "left,re,im\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        os << g.cell_left(i).to_string() << ',' << fmt(g.values()[i].real()) << ',' << fmt(g.values()[i].imag())
           << '\n';
    }
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace qmf
