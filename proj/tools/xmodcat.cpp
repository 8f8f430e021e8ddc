// xmodcat: premodular data of the category attached to a finite crossed
// module, computed in exact cyclotomic arithmetic.
//
//   xmodcat <validate|irr|modular|fusion|vacuum|verify|report> <file>
//           [--json] [--out PATH] [--csv PATH] [--fast] [--jobs N]
//
// Exit codes: 0 success (all checks pass), 1 validation or check failure,
// 2 parse error, 3 internal consistency failure.

#include "xmodcat/errors.hpp"
#include "xmodcat/parallel.hpp"
#include "xmodcat/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace xmodcat;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("SyntaxError", "$", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("IoError", "cannot write '" + path + "'");
    out << content;
}

void emit(const json& j, const std::string& out_path) {
    write_output(out_path, j.dump(2));
}

std::string cyc_display(const Cyclotomic& v) {
    std::string s = v.str();
    if (v.is_rational()) return s;
    auto z = v.approx();
    std::ostringstream out;
    out << s << " (~" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return out.str();
}

void print_validation(const CrossedModule& x, const ValidationReport& report,
                      const ExactnessData* e) {
    std::cout << "crossed module: " << (x.name.empty() ? "(unnamed)" : x.name)
              << "  |X1| = " << x.x1.order << "  |X2| = " << x.x2.order << "\n";
    if (report.pass()) {
        std::cout << "axioms: PASS (action, automorphism, boundary hom, XMod1, XMod2)\n";
    } else {
        for (const AxiomFailure& f : report.failures) {
            std::cout << "axioms: FAIL " << f.axiom << " at (";
            for (size_t i = 0; i < f.witness.size(); ++i)
                std::cout << (i ? "," : "") << f.witness[i];
            std::cout << "): " << f.detail << "\n";
        }
        return;
    }
    if (e != nullptr) {
        std::cout << "exact sequence: |K| = " << e->kernel.size() << "  |I| = " << e->image.size()
                  << "  |C| = " << e->cosets.size() << "  |X| = " << e->global_order
                  << "  boundary " << (e->boundary_bijective ? "bijective" : "not bijective")
                  << "\n";
        std::cout << "cardinality: |X2||C| = " << static_cast<long long>(x.x2.order) * e->cosets.size()
                  << " = |K||X1| = " << static_cast<long long>(e->kernel.size()) * x.x1.order
                  << "\n";
    }
}

void print_irreducibles(const Irreducibles& irr) {
    std::cout << "irreducibles: " << irr.count() << "  (identity at index " << irr.identity_index
              << ")\n";
    std::cout << "  idx  orbit_rep  stab_irr  dim\n";
    for (int p = 0; p < irr.count(); ++p) {
        const IrreducibleLabel& l = irr.labels[static_cast<size_t>(p)];
        std::cout << "  " << p << "\t" << l.orbit_rep << "\t" << l.stab_irr << "\t" << l.dim
                  << "\n";
    }
    std::int64_t sum_sq = 0;
    for (const auto& l : irr.labels) sum_sq += l.dim * l.dim;
    std::cout << "  sum d^2 = " << sum_sq << "\n";
}

void print_modular(const ModularData& md) {
    const int n = static_cast<int>(md.omega.size());
    std::cout << "|X| = " << md.global_order << "  rank(S) = " << md.s_rank
              << "  rank(S^4) = " << md.s4_rank << "\n";
    std::cout << "twists:\n";
    for (int p = 0; p < n; ++p)
        std::cout << "  omega[" << p << "] = " << cyc_display(md.omega[static_cast<size_t>(p)])
                  << "  (zeta_" << md.omega_order[static_cast<size_t>(p)].first << "^"
                  << md.omega_order[static_cast<size_t>(p)].second << ")\n";
    std::cout << "fs indicators:";
    for (int v : md.fs) std::cout << " " << v;
    std::cout << "\nS matrix (exact):\n";
    for (int i = 0; i < md.s.rows(); ++i) {
        std::cout << "  ";
        for (int j = 0; j < md.s.cols(); ++j) std::cout << md.s.at(i, j).str() << "\t";
        std::cout << "\n";
    }
}

void print_fusion(const FusionTensor& f) {
    std::cout << "fusion tensor: " << f.count << " irreducibles, nonzero N_pq^r:\n";
    for (int p = 0; p < f.count; ++p)
        for (int q = 0; q < f.count; ++q)
            for (int r = 0; r < f.count; ++r)
                if (f.at(p, q, r) != 0)
                    std::cout << "  N[" << p << "," << q << "]^" << r << " = " << f.at(p, q, r)
                              << "\n";
}

void print_vacuum(const VacuumReport& v) {
    std::cout << "vacuum dimension D = |C||K| = " << v.vacuum_dim << "\n";
    std::cout << "mu:";
    for (auto m : v.mu) std::cout << " " << m;
    std::cout << "\ntransparent irreducibles:";
    for (int p : v.transparent) std::cout << " " << p;
    std::cout << "\nboundary bijective: " << (v.boundary_bijective ? "yes" : "no")
              << "  rank(S) = " << v.s_rank << "\n";
    std::cout << "verdict: " << verdict_name(v.verdict) << "\n";
}

void print_verify(const VerificationReport& report) {
    for (const CheckResult& c : report.checks) {
        std::cout << "  [" << (c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL")) << "] " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << (report.pass() ? "verify: PASS" : "verify: FAIL") << "\n";
}

int run_command(const std::string& command, const std::string& file, bool as_json,
                const std::string& out_path, const std::string& csv_path, bool fast, int jobs) {
    std::string text = read_file(file);
    XmodDocument doc = parse_document(text);
    json echo = json::parse(text);
    CrossedModule xm = build_document(doc);
    AnalysisOptions options;
    options.jobs = jobs;
    Analysis analysis(std::move(xm), options);

    if (command == "validate") {
        const ValidationReport& report = analysis.validation();
        const ExactnessData* e = report.pass() ? &analysis.exact() : nullptr;
        if (as_json) {
            json j{{"name", analysis.xmod().name},
                   {"validation", json_io::validation_json(report)}};
            if (e != nullptr) j["exactness"] = json_io::exactness_json(*e);
            emit(j, out_path);
        } else {
            print_validation(analysis.xmod(), report, e);
        }
        return report.pass() ? 0 : 1;
    }

    if (command == "irr") {
        if (as_json)
            emit(json_io::irreducibles_json(analysis.irreducible_set(), analysis.xmod()), out_path);
        else
            print_irreducibles(analysis.irreducible_set());
        return 0;
    }

    if (command == "modular") {
        if (as_json)
            emit(json_io::modular_json(analysis.modular()), out_path);
        else
            print_modular(analysis.modular());
        return 0;
    }

    if (command == "fusion") {
        const FusionTensor& f = analysis.fusion();
        if (!csv_path.empty()) write_output(csv_path, json_io::fusion_csv(f));
        if (as_json)
            emit(json_io::fusion_json(f), out_path);
        else
            print_fusion(f);
        return 0;
    }

    if (command == "vacuum") {
        if (as_json)
            emit(json_io::vacuum_json(analysis.vacuum()), out_path);
        else
            print_vacuum(analysis.vacuum());
        return 0;
    }

    if (command == "verify") {
        VerificationReport report = analysis.verify(!fast);
        if (as_json)
            emit(json_io::verify_json(report), out_path);
        else
            print_verify(report);
        return report.pass() ? 0 : 1;
    }

    if (command == "report") {
        json j = json_io::report_json(analysis, echo, !fast);
        emit(j, out_path);
        bool pass = j.contains("verify") && j["verify"]["pass"].get<bool>();
        return pass ? 0 : 1;
    }

    throw InputError("UnknownCommand", "unknown subcommand '" + command + "'");
}

json error_json(const std::string& kind, const Error& err) {
    json j{{"error", kind}, {"code", err.code()}, {"message", err.what()}};
    if (const auto* p = dynamic_cast<const ParseError*>(&err)) j["path"] = p->path();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"premodular category data of a finite crossed module"};
    app.require_subcommand(1);

    std::string file, out_path, csv_path;
    bool as_json = false, fast = false;
    int jobs = default_jobs();

    std::vector<CLI::App*> subs;
    for (const char* name : {"validate", "irr", "modular", "fusion", "vacuum", "verify", "report"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", file, "crossed-module document (JSON)")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
        sub->add_option("--out", out_path, "write output to PATH instead of stdout");
        if (std::string(name) == "fusion")
            sub->add_option("--csv", csv_path, "also export the fusion tensor as CSV");
        if (std::string(name) == "verify" || std::string(name) == "report")
            sub->add_flag("--fast", fast, "skip explicit-object checks");
        sub->add_option("--jobs", jobs, "worker threads (output is independent of this)");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string command;
    for (CLI::App* sub : subs)
        if (sub->parsed()) command = sub->get_name();

    try {
        return run_command(command, file, as_json, out_path, csv_path, fast, jobs);
    } catch (const ParseError& err) {
        std::cerr << error_json("parse", err).dump() << "\n";
        return 2;
    } catch (const InternalError& err) {
        std::cerr << error_json("internal", err).dump() << "\n";
        return 3;
    } catch (const InputError& err) {
        std::cerr << error_json("input", err).dump() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << json{{"error", "internal"}, {"message", err.what()}}.dump() << "\n";
        return 3;
    }
}
