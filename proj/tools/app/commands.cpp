#include "commands.hpp"

#include <ostream>
#include <regex>

#include "esymlab/builtins.hpp"
#include "esymlab/expr.hpp"
#include "esymlab/modlab.hpp"
#include "esymlab/series.hpp"

namespace esymlab::app {

namespace {

void print_parse_error(const std::string& label, const std::string& text, const ParseError& e, std::ostream& err) {
    err << label << ": " << e.what() << '\n' << "  " << text << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
}

}  // namespace

std::size_t exact_prefix_limit(const std::string& name) {
    if (name == "e2p4" || name == "e3p4") return 601;
    if (name == "p" || name == "pQ" || name == "pB" || name == "p4" || name == "sigma" || name == "b12")
        return 20001;
    return 2001;
}

int cmd_seq(const SeqOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err) {
    if (!is_registered_sequence(o.name)) {
        err << "unknown sequence '" << o.name << "'\n";
        return kExitUsage;
    }
    SequenceParams params;
    try {
        params.j = o.j;
        params.src = PartSource::parse(o.src);
        if (o.j == 0) throw std::invalid_argument("--j must be at least 1");
        if (o.mod && *o.mod < 2) throw std::invalid_argument("--mod must be at least 2");
        if (o.format != "csv" && o.format != "json") throw std::invalid_argument("--format must be csv or json");
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
    const long long first = static_cast<long long>(sequence_first_index(o.name));
    const long long from = o.from.value_or(first);
    if (from < first || o.to < from || o.to > kMaxSeqIndex) {
        err << "bad range [" << from << ", " << o.to << "] for " << o.name << ": indices run from " << first
            << " to at most " << kMaxSeqIndex << '\n';
        return kExitBadRange;
    }
    BigSeq seq;
    try {
        seq = store.get(o.name, params, static_cast<std::size_t>(o.to));
    } catch (const CacheCorrupt& e) {
        err << "corrupt cache: " << e.what() << '\n';
        return kExitFailure;
    }
    const char* column = o.mod ? "residue" : "value";
    auto value_at = [&](std::size_t n) {
        if (!o.mod) return seq.at(n).get_str();
        BigInt r;
        mpz_fdiv_r_ui(r.get_mpz_t(), seq.at(n).get_mpz_t(), *o.mod);
        return r.get_str();
    };
    if (o.format == "csv") {
        out << "n," << column << '\n';
        for (long long n = from; n <= o.to; ++n) out << n << ',' << value_at(static_cast<std::size_t>(n)) << '\n';
    } else {
        nlohmann::json rows = nlohmann::json::array();
        for (long long n = from; n <= o.to; ++n) rows.push_back({{"n", n}, {column, value_at(static_cast<std::size_t>(n))}});
        out << rows.dump() << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err) {
    SuiteReport report;
    try {
        report = run_suite(o.suite, store, o.suite_options);
    } catch (const UnknownSuite& e) {
        err << e.what() << "; known suites:";
        for (const auto& s : standard_suites()) err << ' ' << s;
        for (const auto& s : extra_suites()) err << ' ' << s;
        err << " all\n";
        return kExitUsage;
    }
    if (o.format == "json") {
        out << to_json(report).dump(2) << '\n';
    } else {
        render_text(report, out);
        out << to_json(report).dump() << '\n';
    }
    return report.exit_code();
}

int cmd_period(const PeriodOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err) {
    if (!is_registered_sequence(o.name) || sequence_first_index(o.name) != 0) {
        err << "no exact prefix registered for '" << o.name << "'\n";
        return kExitUsage;
    }
    if (o.mod < 2 || o.mod > (std::uint64_t{1} << 32)) {
        err << "--mod must lie in [2, 2^32]\n";
        return kExitUsage;
    }
    const std::size_t limit = exact_prefix_limit(o.name);
    if (o.window == 0) {
        err << "window must be positive\n";
        return kExitBadRange;
    }
    ResidueSeq residues;
    try {
        if (o.window <= limit) {
            residues = reduce(store.get(o.name, o.window - 1), o.mod);
        } else if (!o.extend) {
            err << "window " << o.window << " exceeds the exact prefix of " << limit << " values for " << o.name
                << "; pass --extend to continue by the recurrence\n";
            return kExitBadRange;
        } else if (o.name != "e2p4") {
            err << "no recurrence registered for '" << o.name << "'\n";
            return kExitBadRange;
        } else {
            residues = extend_mod(store.get(o.name, limit - 1), LinRecurrence::e2p4(), o.mod, o.window);
        }
    } catch (const CacheCorrupt& e) {
        err << "corrupt cache: " << e.what() << '\n';
        return kExitFailure;
    } catch (const IdentityMismatch& e) {
        err << e.what() << '\n';
        return kExitFailure;
    }

    std::string provenance;
    for (const auto& r : residues.provenance) {
        if (!provenance.empty()) provenance += "; ";
        provenance += std::to_string(r.begin) + ".." + std::to_string(r.end) + " " + to_string(r.kind);
        if (r.kind == Provenance::RecurrenceExtension) provenance += " (conditional on conjectured recurrence)";
    }
    try {
        const PeriodReport rep = detect_period(residues, o.burn_in_max);
        if (o.format == "json") {
            out << nlohmann::json{{"name", o.name},         {"modulus", rep.modulus}, {"window", rep.window},
                                  {"period", rep.period},   {"burn_in", rep.burn_in}, {"pure", rep.pure()},
                                  {"provenance", provenance}}
                       .dump()
                << '\n';
        } else {
            out << "sequence:   " << o.name << '\n'
                << "modulus:    " << rep.modulus << '\n'
                << "window:     " << rep.window << '\n'
                << "period:     " << rep.period << '\n'
                << "burn-in:    " << rep.burn_in << (rep.pure() ? " (pure)" : "") << '\n'
                << "provenance: " << provenance << '\n';
        }
        return kExitOk;
    } catch (const NoPeriodFound& e) {
        err << e.what() << '\n' << "provenance: " << provenance << '\n';
        return kExitNoPeriod;
    }
}

int cmd_gf(const GfOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err) {
    if (o.order == 0) {
        err << "--order must be positive\n";
        return kExitBadRange;
    }
    if (o.mod && *o.mod < 2) {
        err << "--mod must be at least 2\n";
        return kExitUsage;
    }
    // A bare identifier on the right names a builtin series.
    static const std::regex bare("[A-Za-z_][A-Za-z0-9_]*");
    const std::string rhs_text = std::regex_match(o.rhs, bare) && o.rhs != "q" ? "#" + o.rhs : o.rhs;

    std::optional<RationalExpr> lhs, rhs;
    try {
        lhs = parse_expr(o.lhs);
    } catch (const ParseError& e) {
        print_parse_error("lhs", o.lhs, e, err);
        return kExitUsage;
    }
    try {
        rhs = parse_expr(rhs_text);
    } catch (const ParseError& e) {
        print_parse_error("rhs", rhs_text, e, err);
        return kExitUsage;
    }

    const Ring ring = o.mod ? Ring::mod(*o.mod) : Ring::exact();
    const SequenceSource sequences = [&](const std::string& name, std::size_t n) { return store.get(name, n); };
    const BuiltinResolver resolver = [&](const std::string& name, std::size_t order, const Ring& r) {
        return resolve_builtin(name, order, r, sequences);
    };
    IdentityResult result;
    try {
        result = check_identity(eval_expr(*lhs, o.order, ring, resolver), eval_expr(*rhs, o.order, ring, resolver));
    } catch (const UnknownBuiltin& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const CacheCorrupt& e) {
        err << "corrupt cache: " << e.what() << '\n';
        return kExitFailure;
    }
    out << "lhs:   " << lhs->to_string() << '\n' << "rhs:   " << rhs->to_string() << '\n';
    out << "order: " << o.order << ", ring: " << ring.name() << '\n';
    if (const auto* m = std::get_if<FirstMismatch>(&result)) {
        out << "Mismatch at exponent " << m->exponent << ": lhs " << m->lhs.get_str() << ", rhs " << m->rhs.get_str()
            << '\n';
        return kExitFailure;
    }
    out << "Match\n";
    return kExitOk;
}

}  // namespace esymlab::app
