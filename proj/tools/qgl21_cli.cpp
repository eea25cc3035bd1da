#include "CLI11.hpp"
#include "json.hpp"

#include "qgl21/checks.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace qgl21;

namespace {

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> splitList(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

bool parseSpectral(const std::string& s, Spectral& sp) {
    auto parts = splitList(s, ',');
    if (parts.size() != 3) return false;
    try {
        size_t p0 = 0, p1 = 0, p2 = 0;
        sp.s0 = std::stoi(parts[0], &p0);
        sp.s1 = std::stoi(parts[1], &p1);
        sp.s2 = std::stoi(parts[2], &p2);
        return p0 == parts[0].size() && p1 == parts[1].size() && p2 == parts[2].size();
    } catch (...) {
        return false;
    }
}

json polyJson(const Poly& p) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    json a = json::array();
    for (const Int& c : p.coeffs()) {
        if (c >= lo && c <= hi)
            a.push_back(c.convert_to<long long>());
        else
            a.push_back(c.str());
    }
    return a;
}

json elJson(const El& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms()) {
        json t;
        t["f12"] = m.f12;
        t["f13"] = m.f13;
        t["f23"] = m.f23;
        t["k"] = json::array({m.k[0], m.k[1], m.k[2]});
        t["e12"] = m.e12;
        t["e13"] = m.e13;
        t["e23"] = m.e23;
        t["num"] = polyJson(c.num());
        t["den"] = polyJson(c.den());
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}};
}

Int intFromJson(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long long>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    throw ExprError("polynomial coefficients must be integers or integer strings");
}

Poly polyFromJson(const json& a) {
    if (!a.is_array()) throw ExprError("expected a coefficient array");
    std::vector<Int> cs;
    for (const auto& v : a) cs.push_back(intFromJson(v));
    return Poly(std::move(cs));
}

El elFromJson(const json& j) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ExprError("element JSON needs a top-level \"terms\" array");
    El x;
    for (const auto& t : j["terms"]) {
        Mon m;
        m.f12 = t.value("f12", 0);
        m.f13 = t.value("f13", 0);
        m.f23 = t.value("f23", 0);
        m.e12 = t.value("e12", 0);
        m.e13 = t.value("e13", 0);
        m.e23 = t.value("e23", 0);
        if (t.contains("k")) {
            const auto& k = t["k"];
            if (!k.is_array() || k.size() != 3)
                throw ExprError("\"k\" must be a length-3 array");
            for (int i = 0; i < 3; ++i) m.k[static_cast<size_t>(i)] = k[static_cast<size_t>(i)].get<int>();
        }
        Poly num = polyFromJson(t.value("num", json::array({1})));
        Poly den = polyFromJson(t.value("den", json::array({1})));
        if (den.isZero()) throw ExprError("zero denominator in a coefficient");
        x.add(m, QQ(std::move(num), std::move(den)));
    }
    return x;
}

int diffElements(const El& computed, const El& supplied, std::ostream& out) {
    const auto& a = computed.terms();
    const auto& b = supplied.terms();
    int differing = 0;
    for (const auto& [m, c] : a) {
        auto it = b.find(m);
        if (it == b.end()) {
            out << "missing from transcription: " << El::monomial(m, c).str() << "\n";
            ++differing;
        } else if (!(it->second == c)) {
            out << "coefficient differs: computed " << El::monomial(m, c).str()
                << ", transcribed " << El::monomial(m, it->second).str() << "\n";
            ++differing;
        }
    }
    for (const auto& [m, c] : b)
        if (a.find(m) == a.end()) {
            out << "extra in transcription: " << El::monomial(m, c).str() << "\n";
            ++differing;
        }
    if (differing == 0)
        out << "transcription matches: " << a.size() << " monomials\n";
    else
        out << "transcription differs in " << differing << " monomials\n";
    return differing == 0 ? 0 : 1;
}

int parseLevel(const std::string& s) {
    try {
        size_t pos = 0;
        int n = std::stoi(s, &pos);
        if (pos == s.size() && n >= 1) return n;
    } catch (...) {
    }
    throw ExprError("invalid level '" + s + "'");
}

// real root names as printed: a12+2d, d-a23+1d, a13, d-a12
bool parseRealRoot(const std::string& name, bool& minusFam, int& fam, int& n) {
    std::string rest = name;
    minusFam = false;
    if (rest.rfind("d-", 0) == 0) {
        minusFam = true;
        rest = rest.substr(2);
    }
    static const std::array<std::string, 3> fams{"a12", "a13", "a23"};
    fam = -1;
    for (int i = 0; i < 3; ++i)
        if (rest.rfind(fams[static_cast<size_t>(i)], 0) == 0) {
            fam = i;
            rest = rest.substr(3);
            break;
        }
    if (fam < 0) return false;
    n = 0;
    if (rest.empty()) return true;
    if (rest.size() < 3 || rest.front() != '+' || rest.back() != 'd') return false;
    std::string num = rest.substr(1, rest.size() - 2);
    try {
        size_t pos = 0;
        n = std::stoi(num, &pos);
        return pos == num.size() && n >= 0;
    } catch (...) {
        return false;
    }
}

int tagFromName(const std::string& s) {
    if (s == "alpha1") return 0;
    if (s == "alpha2") return 1;
    throw ExprError("imaginary family tag must be alpha1 or alpha2, got '" + s + "'");
}

std::optional<El> elementForId(const std::string& id, const CheckContext& ctx) {
    auto parts = splitList(id, ':');
    if (parts.empty()) return std::nullopt;
    const std::string& head = parts[0];

    if (head == "Phi" && parts.size() == 2) {
        int n = parseLevel(parts[1]);
        return phiN(epsAt(std::max({4, ctx.truncation, n})).e, n);
    }
    if ((head == "C" || head == "Ct") && parts.size() == 2) {
        int n = parseLevel(parts[1]);
        El cn = traceCs(n).back();
        return head == "C" ? cn : cn.omega();
    }
    if (head == "eps" && (parts.size() == 3 || parts.size() == 4)) {
        const std::string& side = parts[1];
        bool primed = side == "e'" || side == "f'";
        bool lowering = side == "f" || side == "f'";
        if (side != "e" && side != "f" && !primed)
            throw ExprError("side must be e, f, e' or f', got '" + side + "'");
        if (parts.size() == 4) {
            int n = parseLevel(parts[2]);
            int tag = tagFromName(parts[3]);
            const EpsVectors& eps = epsAt(std::max({4, ctx.truncation, n}));
            const RootVectors<El>& rv = lowering ? eps.f : eps.e;
            return primed ? rv.primedImag(tag, n) : rv.imag(tag, n);
        }
        if (primed)
            throw ExprError("primed ids take the form eps:e':n:alpha1");
        bool minusFam = false;
        int fam = 0, n = 0;
        if (!parseRealRoot(parts[2], minusFam, fam, n))
            throw ExprError("unknown real root '" + parts[2] + "'");
        const EpsVectors& eps = epsAt(std::max({4, ctx.truncation, n}));
        const RootVectors<El>& rv = lowering ? eps.f : eps.e;
        return minusFam ? rv.realMinus(fam, n) : rv.real(fam, n);
    }
    return std::nullopt;
}

std::string renderElement(const El& x, const std::string& format) {
    if (format == "latex") return x.latex();
    if (format == "json") return elJson(x).dump(2);
    return x.str();
}

std::string seriesEntryText(const PrefSeries<El>& ps, bool latexMode) {
    if (ps.series().isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= ps.series().order(); ++k) {
        const El& c = ps.series().coeff(k);
        if (c.isZero()) continue;
        int power = ps.pref() + k * ps.period();
        if (!first) os << " + ";
        first = false;
        std::string cs = latexMode ? c.latex() : c.str();
        if (power == 0)
            os << "(" << cs << ")";
        else if (latexMode)
            os << "\\zeta^{" << power << "} (" << cs << ")";
        else
            os << "zeta^" << power << " (" << cs << ")";
    }
    if (first) return "0";
    return os.str();
}

std::string prefMatText(const PrefMat3<El>& m, const std::string& label, bool latexMode) {
    std::ostringstream os;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            os << label << "[" << i << "][" << j << "] = "
               << seriesEntryText(m.at(i, j), latexMode) << "\n";
    return os.str();
}

std::string gop2Text(const GOp2& m, const std::string& label, bool latexMode) {
    std::ostringstream os;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const El& x = m.at(i, j);
            os << label << "[" << i << "][" << j << "] = "
               << (x.isZero() ? std::string("0") : (latexMode ? x.latex() : x.str()))
               << "\n";
        }
    return os.str();
}

// entries labeled by tensor index pairs; u and v are the two legs
std::string rmatText(const RMat9& r) {
    std::ostringstream os;
    for (int i1 = 1; i1 <= 3; ++i1)
        for (int i2 = 1; i2 <= 3; ++i2)
            for (int j1 = 1; j1 <= 3; ++j1)
                for (int j2 = 1; j2 <= 3; ++j2) {
                    const LaurentPoly3& p = r[idx9(i1, i2)][idx9(j1, j2)];
                    if (p.isZero()) continue;
                    os << "R[" << i1 << i2 << "][" << j1 << j2 << "] = " << p.str()
                       << "\n";
                }
    return os.str();
}

std::optional<std::string> matrixForId(const std::string& id, const CheckContext& ctx,
                                       const std::string& format) {
    bool latexMode = format == "latex";
    if (id == "D") return prefMatText(cartanD(ctx.spectral, 0), "D", latexMode);
    if (id == "O-matrix")
        return prefMatText(solvedO(ctx.spectral, ctx.truncation), "O", latexMode);
    if (id == "N-matrix")
        return prefMatText(dressedN(ctx.spectral, ctx.truncation), "N", latexMode);
    if (id == "R-matrix") return rmatText(rbarMatrix(ctx.spectral, 0, 1));
    if (id == "M") return gop2Text(universalM(), "M", latexMode);
    if (id == "Msigma") return gop2Text(universalMSigma(), "Msigma", latexMode);
    return std::nullopt;
}

int runVerify(const std::vector<const NamedCheck*>& suites, const CheckContext& ctx,
              const std::string& format, std::ostream& out) {
    struct Row {
        std::string name, anchor, witness;
        bool pass;
        long long ms;
    };
    std::vector<Row> rows;
    bool anyFail = false;
    for (const NamedCheck* nc : suites) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = nc->run(ctx);
        auto t1 = std::chrono::steady_clock::now();
        long long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        rows.push_back({nc->name, nc->anchor, r.witness, r.pass, ms});
        anyFail = anyFail || !r.pass;
    }
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json o;
            o["name"] = row.name;
            o["status"] = row.pass ? "pass" : "fail";
            o["truncation"] = ctx.truncation;
            o["elapsed_ms"] = row.ms;
            if (!row.pass) o["witness"] = row.witness;
            o["paper_anchor"] = row.anchor;
            arr.push_back(std::move(o));
        }
        out << arr.dump(2) << "\n";
    } else if (format == "latex") {
        out << "\\begin{tabular}{lllr}\n"
            << "name & anchor & status & ms \\\\\n\\hline\n";
        for (const auto& row : rows)
            out << row.name << " & " << row.anchor << " & "
                << (row.pass ? "pass" : "fail") << " & " << row.ms << " \\\\\n";
        out << "\\end{tabular}\n";
    } else {
        for (const auto& row : rows) {
            out << (row.pass ? "pass" : "FAIL") << "  " << row.name << "  ["
                << row.anchor << "]  " << row.ms << " ms\n";
            if (!row.pass) out << "      witness: " << row.witness << "\n";
        }
        out << (anyFail ? "verification FAILED\n" : "all checks passed\n");
    }
    return anyFail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact checker for a quantum loop superalgebra and its basic monodromy "
        "operator"};
    app.require_subcommand(1);

    int truncation = 4;
    std::string spectralStr = "1,1,1";
    std::string checksStr = "all";
    std::string format = "text";
    std::string output;
    std::string exprId;
    std::string diffPath;

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--truncation", truncation,
                        "series truncation order (default 4)")
            ->check(CLI::Range(1, 64));
        cmd->add_option("--spectral", spectralStr,
                        "spectral weights s0,s1,s2 with nonzero sum (default 1,1,1)");
        cmd->add_option("--format", format, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_option("--output", output, "write the result to this file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run named verification suites");
    addCommon(verify);
    verify->add_option("--check", checksStr,
                       "comma-separated suite names, or 'all'");

    CLI::App* render = app.add_subcommand("render", "render a named expression");
    render
        ->add_option("expr", exprId,
                     "expression id, e.g. Phi:1, Ct:2, eps:e':2:alpha2, "
                     "eps:f:d-a23+1d, D, O-matrix, N-matrix, R-matrix, M, Msigma")
        ->required();
    addCommon(render);
    render->add_option("--diff-against", diffPath,
                       "compare against a JSON element transcription");

    CLI11_PARSE(app, argc, argv);

    CheckContext ctx;
    ctx.truncation = truncation;
    if (!parseSpectral(spectralStr, ctx.spectral)) {
        std::cerr << "error: --spectral needs three comma-separated integers\n";
        return 2;
    }
    if (ctx.spectral.s() == 0) {
        std::cerr << "error: the spectral weights must have a nonzero sum\n";
        return 2;
    }

    std::ofstream fileOut;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
        fileOut.open(output);
        if (!fileOut) {
            std::cerr << "error: cannot open '" << output << "'\n";
            return 2;
        }
        out = &fileOut;
    }

    if (verify->parsed()) {
        std::vector<const NamedCheck*> suites;
        if (checksStr == "all") {
            for (const auto& nc : allChecks()) suites.push_back(&nc);
        } else {
            for (const std::string& nm : splitList(checksStr, ',')) {
                const NamedCheck* nc = findCheck(nm);
                if (!nc) {
                    std::cerr << "error: unknown check '" << nm << "'\n";
                    return 2;
                }
                suites.push_back(nc);
            }
        }
        return runVerify(suites, ctx, format, *out);
    }

    try {
        std::optional<El> el = elementForId(exprId, ctx);
        if (el) {
            if (!diffPath.empty()) {
                std::ifstream in(diffPath);
                if (!in) {
                    std::cerr << "error: cannot read '" << diffPath << "'\n";
                    return 2;
                }
                json j;
                try {
                    in >> j;
                } catch (const std::exception& e) {
                    std::cerr << "error: bad JSON in '" << diffPath
                              << "': " << e.what() << "\n";
                    return 2;
                }
                El supplied = elFromJson(j);
                return diffElements(*el, supplied, *out);
            }
            *out << renderElement(*el, format) << "\n";
            return 0;
        }
        if (!diffPath.empty()) {
            std::cerr << "error: --diff-against works only with element-valued ids\n";
            return 2;
        }
        if (format == "json") {
            std::cerr << "error: json rendering covers element-valued ids only\n";
            return 2;
        }
        std::optional<std::string> text = matrixForId(exprId, ctx, format);
        if (text) {
            *out << *text;
            return 0;
        }
        std::cerr << "error: unknown expression id '" << exprId << "'\n";
        return 2;
    } catch (const ExprError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
