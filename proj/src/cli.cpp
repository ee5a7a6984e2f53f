#include "lsf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "lsf/closedform.hpp"
#include "lsf/families.hpp"
#include "lsf/json_io.hpp"
#include "lsf/lorentz.hpp"

namespace lsf::cli {

namespace {

struct Settings {
    std::string mode = "function";
    int nvars = 0;
    std::string basis;
    std::string out = "json";
    std::string input;
    std::string json_text;
    bool parallel = false;
    // family
    std::string shape;
    int degree = 0;
    std::string path;
    // region / bench
    int grid = 140;
};

Json read_input(const Settings& s) {
    std::string text;
    if (!s.json_text.empty()) {
        text = s.json_text;
    } else if (!s.input.empty() && s.input != "-") {
        std::ifstream in(s.input);
        if (!in) throw std::invalid_argument("cannot open input file: " + s.input);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

SymPoly read_sympoly(const Settings& s) {
    Json j = read_input(s);
    if (!s.basis.empty() && j.is_object() && !j.contains("basis")) j["basis"] = s.basis;
    return sympoly_from_json(j);
}

Mode read_mode(const Settings& s) {
    if (s.mode == "function") return Mode::function();
    if (s.mode == "polynomial") {
        if (s.nvars < 1) throw std::invalid_argument("polynomial mode requires --nvars");
        return Mode::polynomial(s.nvars);
    }
    throw std::invalid_argument("unknown mode: " + s.mode);
}

void emit_verdict(const Verdict& v, const Settings& s, std::ostream& out) {
    if (s.out == "csv") {
        out << "lorentzian,failure,opCount\n"
            << (v.lorentzian ? "true" : "false") << ','
            << (v.failure ? std::string(failure_kind_name(v.failure->kind)) : std::string()) << ',' << v.op_count
            << '\n';
    } else {
        out << to_json(v).dump(2) << '\n';
    }
}

ExecPolicy policy_of(const Settings& s) { return s.parallel ? ExecPolicy::Parallel : ExecPolicy::Serial; }

int cmd_check(const Settings& s, std::ostream& out) {
    const SymPoly f = read_sympoly(s);
    const Verdict v = is_lorentzian(f, read_mode(s), Options{policy_of(s), MinorMethod::Expansion});
    emit_verdict(v, s, out);
    return v.lorentzian ? kYes : kNo;
}

int cmd_oracle(const Settings& s, std::ostream& out) {
    if (s.nvars < 1) throw std::invalid_argument("oracle requires --nvars");
    const SymPoly f = read_sympoly(s);
    const Verdict v = oracle_is_lorentzian(expand(f, s.nvars), policy_of(s));
    emit_verdict(v, s, out);
    return v.lorentzian ? kYes : kNo;
}

int cmd_convert(const Settings& s, std::ostream& out) {
    if (s.basis.empty()) throw std::invalid_argument("convert requires --basis");
    Json j = read_input(s);
    const SymPoly f = sympoly_from_json(j);
    out << to_json(convert_basis(f, parse_basis(s.basis))).dump(2) << '\n';
    return kYes;
}

void emit_family(const SymPoly& f, const Settings& s, std::ostream& out) {
    const Basis target = s.basis.empty() ? Basis::NormalizedMonomial : parse_basis(s.basis);
    out << to_json(convert_basis(f, target)).dump(2) << '\n';
}

int cmd_region(const Settings& s, std::ostream& out) {
    if (s.grid < 1) throw std::invalid_argument("--grid must be positive");
    const int n = s.grid;
    const bool csv = s.out == "csv";
    Json rows = Json::array();
    if (csv) out << "a,b,c,n2,n5,fn\n";
    // The series n = 2 and n = 5 count variables as n + 1.
    const Mode n2 = Mode::polynomial(3), n5 = Mode::polynomial(6), fn = Mode::function();
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            Rational a(i, n), b(j, n), c(n - i - j, n);
            a.canonicalize();
            b.canonicalize();
            c.canonicalize();
            const bool m2 = degree3(a, b, c, n2).member;
            const bool m5 = degree3(a, b, c, n5).member;
            const bool mf = degree3(a, b, c, fn).member;
            if (csv) {
                out << to_string(a) << ',' << to_string(b) << ',' << to_string(c) << ',' << m2 << ',' << m5 << ','
                    << mf << '\n';
            } else {
                rows.push_back(Json{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)},
                                    {"n2", m2}, {"n5", m5}, {"fn", mf}});
            }
        }
    }
    if (!csv) out << rows.dump(2) << '\n';
    return kYes;
}

int cmd_bench(const Settings& s, std::ostream& out) {
    SymPoly f;
    if (!s.json_text.empty() || !s.input.empty()) {
        f = read_sympoly(s);
    } else {
        if (s.degree < 2) throw std::invalid_argument("bench requires --degree >= 2 or an input");
        f = mconvex_generating(Partition{s.degree});
    }
    Json counts = Json::object();
    std::ostringstream csv;
    csv << "n,opCount\n";
    std::optional<std::uint64_t> first;
    bool constant = true;
    for (int n : {10, 100, 1000}) {
        const Verdict v = is_lorentzian(f, Mode::polynomial(n), Options{policy_of(s), MinorMethod::Expansion});
        counts[std::to_string(n)] = v.op_count;
        csv << n << ',' << v.op_count << '\n';
        if (first && *first != v.op_count) constant = false;
        if (!first) first = v.op_count;
    }
    if (s.out == "csv")
        out << csv.str();
    else
        out << Json{{"degree", f.degree()}, {"opCount", counts}, {"constant", constant}}.dump(2) << '\n';
    return constant ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Exact tests for Lorentzian symmetric polynomials and functions", "lsf"};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", s.input, "Read the SymPoly JSON from a file ('-' for stdin)");
        sub->add_option("--json", s.json_text, "Inline SymPoly JSON");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", s.out, "Output format")->check(CLI::IsMember({"json", "csv"}));
    };
    const auto bases = CLI::IsMember({"m", "mtilde", "s", "ns"});

    auto* check = app.add_subcommand("check", "Run the reduced tester");
    add_input(check);
    add_out(check);
    check->add_option("--mode", s.mode)->check(CLI::IsMember({"function", "polynomial"}));
    check->add_option("--nvars", s.nvars, "Number of variables (implies polynomial mode)");
    check->add_option("--basis", s.basis, "Basis of the input when the JSON omits it")->check(bases);
    check->add_flag("--parallel", s.parallel, "Check the Hessians concurrently");

    auto* oracle = app.add_subcommand("oracle", "Expand and check the definition directly");
    add_input(oracle);
    add_out(oracle);
    oracle->add_option("--nvars", s.nvars)->required();
    oracle->add_option("--basis", s.basis)->check(bases);
    oracle->add_flag("--parallel", s.parallel);

    auto* convert = app.add_subcommand("convert", "Rewrite a SymPoly in another basis");
    add_input(convert);
    convert->add_option("--basis", s.basis, "Target basis")->required()->check(bases);

    auto* family = app.add_subcommand("family", "Emit a member of a named family");
    family->require_subcommand(1);
    auto* fam_ns = family->add_subcommand("ns", "Normalized Schur function");
    fam_ns->add_option("--shape", s.shape)->required();
    auto* fam_e = family->add_subcommand("e", "Elementary symmetric function");
    fam_e->add_option("--degree", s.degree)->required();
    auto* fam_mc = family->add_subcommand("mconvex", "Generating function of an interval [1^d, shape]");
    fam_mc->add_option("--shape", s.shape)->required();
    auto* fam_chrom = family->add_subcommand("chromatic", "Chromatic symmetric function of a Dyck path");
    fam_chrom->add_option("--path", s.path)->required();
    fam_chrom->add_option("--nvars", s.nvars);
    for (auto* sub : {fam_ns, fam_e, fam_mc, fam_chrom})
        sub->add_option("--basis", s.basis, "Output basis (default mtilde)")->check(bases);

    auto* region = app.add_subcommand("region", "Sample the cubic regions on the simplex a+b+c=1");
    region->add_option("--grid", s.grid, "Grid resolution N (points i/N)");
    add_out(region);

    auto* bench = app.add_subcommand("bench", "Operation counts for n in {10, 100, 1000}");
    add_input(bench);
    add_out(bench);
    bench->add_option("--degree", s.degree, "Degree of the default input");
    bench->add_flag("--parallel", s.parallel);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kYes : kError;
    }

    try {
        if (check->parsed()) {
            if (s.nvars > 0 && s.mode == "function" && check->count("--mode") == 0) s.mode = "polynomial";
            return cmd_check(s, out);
        }
        if (oracle->parsed()) return cmd_oracle(s, out);
        if (convert->parsed()) return cmd_convert(s, out);
        if (family->parsed()) {
            if (fam_ns->parsed()) emit_family(normalized_schur(Partition::parse(s.shape)), s, out);
            if (fam_e->parsed()) emit_family(elementary(s.degree), s, out);
            if (fam_mc->parsed()) emit_family(mconvex_generating(Partition::parse(s.shape)), s, out);
            if (fam_chrom->parsed()) {
                const DyckPath d(s.path);
                const Graph g = indifference_graph(d);
                const int n = s.nvars > 0 ? s.nvars : g.n;
                emit_family(chromatic_symmetric(g, n).m, s, out);
            }
            return kYes;
        }
        if (region->parsed()) {
            if (region->count("--out") == 0) s.out = "csv";
            return cmd_region(s, out);
        }
        if (bench->parsed()) return cmd_bench(s, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace lsf::cli
