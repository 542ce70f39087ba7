#include "olpuc/io.hpp"

#include "olpuc/error.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <regex>
#include <sstream>

namespace olpuc {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
    throw Error(ErrorKind::ParseError, source + ": field '" + field + "': " + what);
}

cplx to_complex(const json& j, const std::string& source, const std::string& field) {
    if (j.is_number()) return j.get<double>();
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail(source, field, "expected a number or [re, im]");
}

double to_real(const json& j, const std::string& source, const std::string& field) {
    if (!j.is_number()) fail(source, field, "expected a number");
    return j.get<double>();
}

std::vector<cplx> to_complex_list(const json& j, const std::string& source, const std::string& field) {
    if (!j.is_array()) fail(source, field, "expected a list of [re, im]");
    std::vector<cplx> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(to_complex(j[i], source, field + "[" + std::to_string(i) + "]"));
    return out;
}

FactorKind factor_kind(const std::string& s, const std::string& source, const std::string& field) {
    static const std::map<std::string, FactorKind> kinds{
        {"toda_exp", FactorKind::toda_exp},
        {"miwa1_plus", FactorKind::miwa1_plus},
        {"miwa1_minus", FactorKind::miwa1_minus},
        {"miwa2_plus", FactorKind::miwa2_plus},
        {"miwa2_minus", FactorKind::miwa2_minus},
        {"linear_z", FactorKind::linear_z},
        {"linear_zinv", FactorKind::linear_zinv},
        {"inverse_linear_z", FactorKind::inverse_linear_z},
        {"inverse_linear_zinv", FactorKind::inverse_linear_zinv},
        {"conjugate_pair", FactorKind::conjugate_pair},
        {"inverse_conjugate_pair", FactorKind::inverse_conjugate_pair}};
    auto it = kinds.find(s);
    if (it == kinds.end()) fail(source, field, "unknown factor kind '" + s + "'");
    return it->second;
}

Factor parse_factor(const json& j, const std::string& source, const std::string& field) {
    if (!j.is_object()) fail(source, field, "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string()) fail(source, field + ".kind", "missing or not a string");
    Factor f{factor_kind(j["kind"].get<std::string>(), source, field + ".kind"), {}, 0.0, 0.0};
    switch (f.kind) {
    case FactorKind::toda_exp:
        if (!j.contains("times")) fail(source, field + ".times", "required for toda_exp");
        if (j["times"].contains("t1")) f.times.t1 = to_complex_list(j["times"]["t1"], source, field + ".times.t1");
        if (j["times"].contains("t2")) f.times.t2 = to_complex_list(j["times"]["t2"], source, field + ".times.t2");
        break;
    case FactorKind::miwa1_plus:
    case FactorKind::miwa1_minus:
    case FactorKind::miwa2_plus:
    case FactorKind::miwa2_minus:
        if (!j.contains("w")) fail(source, field + ".w", "required for Miwa factors");
        f.w = to_complex(j["w"], source, field + ".w");
        if (f.w == cplx(0.0)) fail(source, field + ".w", "must be nonzero");
        break;
    default:
        if (!j.contains("lambda")) fail(source, field + ".lambda", "required for linear and pair factors");
        f.lambda = to_complex(j["lambda"], source, field + ".lambda");
    }
    return f;
}

Measure parse_spec(const json& j, const std::string& source, const std::string& field, int bound) {
    if (!j.is_object()) fail(source, field, "expected an object");
    if (j.contains("bound")) {
        if (!j["bound"].is_number_integer() || j["bound"].get<int>() < 1) fail(source, field + ".bound", "expected a positive integer");
        bound = j["bound"].get<int>();
    }
    if (!j.contains("kind") || !j["kind"].is_string()) fail(source, field + ".kind", "missing or not a string");
    const std::string kind = j["kind"].get<std::string>();
    auto fld = [&](const char* k) { return field.empty() ? std::string(k) : field + "." + k; };

    std::optional<Measure> m;
    if (kind == "lebesgue") {
        m = Measure::lebesgue(bound);
    } else if (kind == "exp_cos_weight") {
        m = Measure::exp_cos(bound);
    } else if (kind == "trig_poly_weight") {
        if (!j.contains("params") || !j["params"].contains("a")) fail(source, fld("params.a"), "required for trig_poly_weight");
        m = Measure::trig_poly(to_real(j["params"]["a"], source, fld("params.a")), bound);
    } else if (kind == "fourier_table") {
        if (!j.contains("coeffs") || !j["coeffs"].is_object()) fail(source, fld("coeffs"), "expected an object of n: [re, im]");
        std::map<int, cplx> c;
        for (const auto& [key, val] : j["coeffs"].items()) {
            const std::string f = fld("coeffs") + "." + key;
            int n = 0;
            size_t used = 0;
            try {
                n = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || key.empty()) fail(source, f, "key is not an integer");
            c[n] = to_complex(val, source, f);
        }
        try {
            m = Measure::fourier_table(std::move(c), bound);
        } catch (const Error& e) {
            fail(source, fld("coeffs"), e.what());
        }
    } else if (kind == "decorated") {
        if (!j.contains("base")) fail(source, fld("base"), "required for decorated");
        m = parse_spec(j["base"], source, fld("base"), bound);
    } else {
        fail(source, fld("kind"), "unknown measure kind '" + kind + "'");
    }

    if (j.contains("decorations")) {
        const json& d = j["decorations"];
        if (!d.is_array()) fail(source, fld("decorations"), "expected a list");
        for (size_t i = 0; i < d.size(); ++i)
            m = m->decorated(parse_factor(d[i], source, fld("decorations") + "[" + std::to_string(i) + "]"));
    }
    return *m;
}

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

std::string fmt(double x) {
    std::ostringstream os;
    os << std::setprecision(15) << x;
    return os.str();
}

} // namespace

Measure parse_measure(const std::string& text, const std::string& source) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        throw Error(ErrorKind::ParseError,
                    source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
    return parse_spec(j, source, "", Measure::default_bound);
}

Measure load_measure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_measure(ss.str(), path);
}

cplx parse_complex(const std::string& s) {
    static const std::string real = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex re_real(R"(\s*([+-]?)" + real + R"()\s*)");
    static const std::regex re_imag(R"(\s*([+-]?)()" + real + R"()?\s*i\s*)");
    static const std::regex re_both(R"(\s*([+-]?)" + real + R"()\s*([+-])\s*()" + real + R"()?\s*i\s*)");
    std::smatch mt;
    if (std::regex_match(s, mt, re_real)) return std::stod(mt[1].str());
    if (std::regex_match(s, mt, re_imag)) {
        const double v = mt[2].matched ? std::stod(mt[2].str()) : 1.0;
        return {0.0, mt[1].str() == "-" ? -v : v};
    }
    if (std::regex_match(s, mt, re_both)) {
        const double v = mt[3].matched ? std::stod(mt[3].str()) : 1.0;
        return {std::stod(mt[1].str()), mt[2].str() == "-" ? -v : v};
    }
    throw Error(ErrorKind::ParseError, "not a complex number: '" + s + "'");
}

std::vector<cplx> parse_complex_list(const std::string& s) {
    std::vector<cplx> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    return out;
}

Ordering parse_ordering(const std::string& s) {
    static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
    std::smatch mt;
    if (!std::regex_match(s, mt, re)) throw Error(ErrorKind::ParseError, "ordering must be 'n+,n-': '" + s + "'");
    const int np = std::stoi(mt[1].str()), nm = std::stoi(mt[2].str());
    if (np < 1 || nm < 1) throw Error(ErrorKind::ParseError, "ordering entries must be positive: '" + s + "'");
    return Ordering(np, nm);
}

void write_report_json(std::ostream& os, const std::vector<CheckResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        json p = json::object();
        for (const auto& [k, v] : r.params) p[k] = v;
        // JSON has no infinity; failed evaluations report null
        json res = std::isfinite(r.residual) ? json(std::stod(fmt(r.residual))) : json(nullptr);
        arr.push_back({{"check", r.check}, {"params", p}, {"residual", res}, {"tolerance", r.tolerance}, {"pass", r.pass}});
    }
    json out = {{"pass", all_pass(results)}, {"checks", arr}};
    os << out.dump(2) << '\n';
}

void write_report_table(std::ostream& os, const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        os << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(44) << r.check << " residual "
           << std::setw(22) << fmt(r.residual) << " tol " << fmt(r.tolerance) << '\n';
}

} // namespace olpuc
