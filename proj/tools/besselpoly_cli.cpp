#include "besselpoly/errors.hpp"
#include "besselpoly/jacobi_bc.hpp"
#include "besselpoly/ledger.hpp"
#include "besselpoly/operators.hpp"
#include "besselpoly/orthogonality.hpp"
#include "besselpoly/pieri_norms.hpp"
#include "besselpoly/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace besselpoly;

namespace {

enum ExitCode { Ok = 0, InvalidInput = 1, Degenerate = 2, Violation = 3 };

struct RunConfig {
    int n = 1;
    std::string a = "-20";
    std::string kappa = "1";
    std::string lambda;
    int max_degree = 3;
    int d_max = default_d_max;
    int r = 0;
    std::string k1, k2, k3;
    bool renormalize = false;
    std::string out;
    bool verbose = false;
    std::string suite;
};

class InvalidInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidInputError("not an integer part: '" + item + "'");
        }
        if (used != item.size())
            throw InvalidInputError("not an integer part: '" + item + "'");
        parts.push_back(v);
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        throw InvalidInputError(e.what());
    }
}

Rational parse_value(const std::string& text, const char* name)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw InvalidInputError(std::string(name) + ": " + e.what());
    }
}

BesselParams bessel_params(const RunConfig& cfg)
{
    if (cfg.n < 1)
        throw InvalidInputError("n must be positive");
    return {parse_value(cfg.a, "a"), parse_value(cfg.kappa, "kappa"), cfg.n};
}

Partition required_partition(const RunConfig& cfg, int n)
{
    Partition lambda = parse_partition(cfg.lambda);
    if (lambda.length() > n)
        throw InvalidInputError("partition " + to_string(lambda) + " has more than n parts");
    return lambda;
}

void emit(const Json& doc, const RunConfig& cfg)
{
    if (cfg.out.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(cfg.out);
    if (!file)
        throw InvalidInputError("cannot write " + cfg.out);
    file << doc.dump(2) << '\n';
}

void progress(const RunConfig& cfg, const std::string& message)
{
    if (cfg.verbose)
        std::cerr << message << '\n';
}

Json params_json(const BesselParams& p)
{
    Json out;
    out["a"] = to_string(p.a);
    out["kappa"] = to_string(p.kappa);
    out["n"] = p.n;
    return out;
}

int cmd_jack(const RunConfig& cfg)
{
    if (cfg.n < 1)
        throw InvalidInputError("n must be positive");
    const Rational kappa = parse_value(cfg.kappa, "kappa");
    const Partition lambda = required_partition(cfg, cfg.n);
    if (kappa <= 0)
        throw InvalidInputError("kappa must be positive");
    emit(jack_to_json(lambda, kappa, cfg.n), cfg);
    return Ok;
}

int cmd_bessel(const RunConfig& cfg)
{
    const BesselParams p = bessel_params(cfg);
    const Partition lambda = required_partition(cfg, p.n);
    const NondegeneracyReport report = check_nondegenerate(lambda, p);
    if (!report.nondegenerate) {
        std::cerr << "degenerate parameters: eigenvalue of " << to_string(*report.collision)
                  << " coincides with that of " << to_string(lambda) << '\n';
        return Degenerate;
    }
    const BesselPolynomial& y = bessel_expand(lambda, p);
    Json doc = bessel_to_json(y);
    const SymPoly m = y.monomials();
    doc["eigencheck"] = apply_DB_direct(m, p) == m * bessel_eigenvalue(lambda, p);
    doc["sufficient_condition"] = report.sufficient_condition;
    if (cfg.renormalize) {
        const BesselPolynomial tilde = renormalize(y);
        Json r;
        r["jack_coeffs"] = to_json(tilde.jack_coeffs);
        r["monomial_coeffs"] = to_json(tilde.monomials());
        r["constant_term"] = to_string(tilde.constant_term());
        doc["renormalized"] = std::move(r);
    }
    emit(doc, cfg);
    return doc["eigencheck"].get<bool>() ? Ok : Violation;
}

class Report {
public:
    void check(const std::string& name, bool pass, const std::string& detail = "")
    {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty())
            c["detail"] = detail;
        checks_.push_back(std::move(c));
        all_ &= pass;
    }
    bool all() const { return all_; }
    Json checks() const { return checks_; }

private:
    Json checks_ = Json::array();
    bool all_ = true;
};

std::vector<Partition> suite_partitions(const RunConfig& cfg, int n)
{
    if (!cfg.lambda.empty())
        return {required_partition(cfg, n)};
    return partitions_up_to(cfg.max_degree, n);
}

void suite_eigen(const RunConfig& cfg, const BesselParams& p, Report& report, Json&)
{
    for (const auto& lambda : suite_partitions(cfg, p.n)) {
        progress(cfg, "eigen " + to_string(lambda));
        const SymPoly y = bessel_expand(lambda, p).monomials();
        const Rational e = bessel_eigenvalue(lambda, p);
        report.check("D^B Y" + to_string(lambda), apply_DB_direct(y, p) == y * e, "eigenvalue " + to_string(e));
        for (const auto& [mu, c] : bessel_expand(lambda, p).jack_coeffs.coeffs) {
            const Rational t = bessel_coeff_tableau(lambda, mu, p);
            if (t != c)
                report.check("tableau coefficient " + to_string(lambda) + "/" + to_string(mu), false,
                             "recurrence " + to_string(c) + ", tableau " + to_string(t));
        }
        for (int d = 2; d <= cfg.d_max; ++d) {
            const std::string name = "D_" + std::to_string(d) + " Y" + to_string(lambda);
            try {
                report.check(name, true, "eigenvalue " + to_string(eigenvalue_of(d, lambda, p, cfg.d_max)));
            } catch (const NotProportional& e) {
                report.check(name, false, e.what());
            }
        }
    }
}

void suite_commute(const RunConfig& cfg, const BesselParams& p, Report& report, Json&)
{
    for (const auto& lambda : partitions_up_to(cfg.max_degree, p.n)) {
        const SymPoly m = SymPoly::monomial(p.n, lambda);
        report.check("D_1 = D^B on m" + to_string(lambda), apply_higher(1, m, p, cfg.d_max) == apply_DB_direct(m, p));
    }
    for (int d = 1; d <= cfg.d_max; ++d)
        for (int e = d + 1; e <= cfg.d_max; ++e) {
            progress(cfg, "commutator " + std::to_string(d) + "," + std::to_string(e));
            report.check("[D_" + std::to_string(d) + ", D_" + std::to_string(e) + "]",
                         commutator_check(d, e, cfg.max_degree, p, cfg.d_max));
        }
}

void suite_pieri(const RunConfig& cfg, const BesselParams& p, Report& report, Json&)
{
    if (cfg.r < 0 || cfg.r > p.n)
        throw InvalidInputError("r must lie in 1..n");
    for (const auto& lambda : suite_partitions(cfg, p.n))
        for (int r = 1; r <= p.n; ++r) {
            if (cfg.r != 0 && r != cfg.r)
                continue;
            progress(cfg, "pieri r=" + std::to_string(r) + " " + to_string(lambda));
            const PieriReport pr = pieri_verify(r, lambda, p);
            report.check("E_" + std::to_string(r) + " Y" + to_string(lambda), pr.ok, pr.mismatch);
        }
}

void suite_gram(const RunConfig& cfg, const BesselParams& p, Report& report, Json& extra)
{
    if (!is_integer(p.kappa) || p.kappa < 0)
        throw InvalidInputError("the Gram matrix needs a non-negative integer kappa");
    if (!check_L2_condition(cfg.max_degree, p))
        throw InvalidInputError("square-integrability fails: need a < -2(m + kappa(n-1)) + 1");
    const GramMatrix gram = gram_matrix(cfg.max_degree, p);
    for (std::size_t i = 0; i < gram.basis.size(); ++i) {
        for (std::size_t j = 0; j < gram.basis.size(); ++j)
            if (i != j && gram.entries[i][j] != 0)
                report.check("off-diagonal " + to_string(gram.basis[i]) + "," + to_string(gram.basis[j]), false,
                             to_string(gram.entries[i][j]));
        const Rational closed = norm_full_reduced(gram.basis[i], p);
        const Rational& diag = gram.entries[i][i];
        report.check("norm " + to_string(gram.basis[i]), diag == closed && diag > 0,
                     "integral " + to_string(diag) + ", product " + to_string(closed));
    }
    report.check("off-diagonals vanish", report.all());
    extra["gram"] = gram_to_json(gram, p);
}

void suite_moments2(const RunConfig& cfg, const BesselParams& p, Report& report, Json& extra)
{
    if (p.n != 2)
        throw InvalidInputError("the moment functional is defined for n = 2");
    const int degree = std::max(cfg.max_degree, 2);
    const MomentTable2 table(2 * degree, p.a, p.kappa);
    report.check("recurrences consistent", table.consistent());
    const int half = degree / 2;
    for (const auto& lambda : partitions_up_to(half, 2))
        for (const auto& mu : partitions_up_to(half, 2)) {
            if (!(GradedPartitionLess{}(lambda, mu)))
                continue;
            const SymPoly f = bessel_expand(lambda, p).monomials() * bessel_expand(mu, p).monomials();
            const Rational v = functional_apply(f, table);
            report.check("I(Y" + to_string(lambda) + " Y" + to_string(mu) + ")", v == 0, to_string(v));
        }
    if (is_integer(p.kappa) && p.kappa >= 0 && check_L2_condition(degree, p)) {
        const SymPoly one = SymPoly::monomial(2, Partition{});
        const Rational norm = inner_product(one, one, p);
        for (const auto& lambda : partitions_up_to(degree, 2)) {
            const SymPoly m = SymPoly::monomial(2, lambda);
            const Rational oracle = inner_product(m, one, p) / norm;
            const Rational v = functional_apply(m, table);
            report.check("I(m" + to_string(lambda) + ") against the integral", v == oracle,
                         to_string(v) + " vs " + to_string(oracle));
        }
    }
    extra["moments"] = moments_to_json(table);
}

void suite_jacobi(const RunConfig& cfg, const BesselParams& p, Report& report, Json& extra)
{
    JacobiParams jp = limit_params(p.a, p.kappa, 1, p.n);
    if (!cfg.k1.empty())
        jp.k1 = parse_value(cfg.k1, "k1");
    if (!cfg.k2.empty())
        jp.k2 = parse_value(cfg.k2, "k2");
    if (!cfg.k3.empty())
        jp.k3 = parse_value(cfg.k3, "k3");
    for (const auto& lambda : suite_partitions(cfg, p.n)) {
        const JackExpansion v = jacobi_expand(lambda, jp);
        const Rational e = jacobi_eigenvalue(lambda, jp);
        report.check("D^BC P" + to_string(lambda), apply_DBC_jack(v, jp) == v * e, "eigenvalue " + to_string(e));
        const SymPoly m = from_jack(v);
        report.check("D^BC P" + to_string(lambda) + " direct", apply_DBC_direct(m, jp) == m * e);
        const Rational closed = jacobi_constant_term(lambda, jp);
        report.check("constant term " + to_string(lambda), closed == v.coeff(Partition{}),
                     "expansion " + to_string(v.coeff(Partition{})) + ", product " + to_string(closed));
    }
    Json j;
    j["k1"] = to_string(jp.k1);
    j["k2"] = to_string(jp.k2);
    j["k3"] = to_string(jp.k3);
    extra["jacobi"] = std::move(j);
}

int cmd_verify(const RunConfig& cfg)
{
    const BesselParams p = bessel_params(cfg);
    if (cfg.max_degree < 0)
        throw InvalidInputError("max-degree must be non-negative");
    if (cfg.d_max < 1)
        throw InvalidInputError("d-max must be positive");
    Report report;
    Json extra = Json::object();
    if (cfg.suite == "eigen")
        suite_eigen(cfg, p, report, extra);
    else if (cfg.suite == "commute")
        suite_commute(cfg, p, report, extra);
    else if (cfg.suite == "pieri")
        suite_pieri(cfg, p, report, extra);
    else if (cfg.suite == "gram")
        suite_gram(cfg, p, report, extra);
    else if (cfg.suite == "moments2")
        suite_moments2(cfg, p, report, extra);
    else if (cfg.suite == "jacobi")
        suite_jacobi(cfg, p, report, extra);
    else
        throw InvalidInputError("unknown suite " + cfg.suite);
    Json doc;
    doc["suite"] = cfg.suite;
    doc["params"] = params_json(p);
    doc["pass"] = report.all();
    doc["checks"] = report.checks();
    for (auto& [key, value] : extra.items())
        doc[key] = value;
    emit(doc, cfg);
    return report.all() ? Ok : Violation;
}

int cmd_ledger(const RunConfig& cfg)
{
    const BesselParams p = bessel_params(cfg);
    Json doc;
    doc["params"] = params_json(p);
    Json entries = Json::array();
    for (const auto& e : discrepancy_ledger(p)) {
        Json j;
        j["topic"] = e.topic;
        j["probe"] = e.probe;
        j["literal"] = e.literal;
        j["corrected"] = e.corrected;
        j["reference"] = e.reference;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    emit(doc, cfg);
    return Ok;
}

void common_options(CLI::App* app, RunConfig& cfg, bool with_a)
{
    app->add_option("--n", cfg.n, "number of variables");
    if (with_a)
        app->add_option("--a", cfg.a, "parameter a, as p/q or an integer");
    app->add_option("--kappa", cfg.kappa, "parameter kappa, as p/q or an integer");
    app->add_option("--out", cfg.out, "write the JSON document to this file");
    app->add_flag("--verbose", cfg.verbose, "report progress on stderr");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact construction and verification of multivariable Bessel polynomials"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* jack = app.add_subcommand("jack", "Jack polynomial in the monomial basis");
    common_options(jack, cfg, false);
    jack->add_option("--lambda", cfg.lambda, "partition, comma separated")->required();

    auto* bessel = app.add_subcommand("bessel", "Bessel polynomial and its eigenvalue");
    common_options(bessel, cfg, true);
    bessel->add_option("--lambda", cfg.lambda, "partition, comma separated")->required();
    bessel->add_flag("--renormalize", cfg.renormalize, "also give the unit constant term normalization");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common_options(verify, cfg, true);
    verify->add_option("suite", cfg.suite, "eigen, commute, pieri, gram, moments2 or jacobi")
        ->required()
        ->check(CLI::IsMember({"eigen", "commute", "pieri", "gram", "moments2", "jacobi"}));
    verify->add_option("--lambda", cfg.lambda, "restrict to one partition");
    verify->add_option("--max-degree", cfg.max_degree, "degree bound");
    verify->add_option("--d-max", cfg.d_max, "largest operator order");
    verify->add_option("--r", cfg.r, "order of the Pieri rule (all orders when omitted)");
    verify->add_option("--k1", cfg.k1, "BC parameter k1");
    verify->add_option("--k2", cfg.k2, "BC parameter k2");
    verify->add_option("--k3", cfg.k3, "BC parameter k3");

    auto* ledger = app.add_subcommand("ledger", "literal and corrected readings of the discrepant formulas");
    common_options(ledger, cfg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : InvalidInput;
    }

    try {
        if (*jack)
            return cmd_jack(cfg);
        if (*bessel)
            return cmd_bessel(cfg);
        if (*verify)
            return cmd_verify(cfg);
        return cmd_ledger(cfg);
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return InvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return InvalidInput;
    } catch (const ConvergenceError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return InvalidInput;
    } catch (const DegenerateEigenvalue& e) {
        std::cerr << "degenerate: " << e.what() << '\n';
        return Degenerate;
    } catch (const DegenerateRecurrence& e) {
        std::cerr << "degenerate: " << e.what() << '\n';
        return Degenerate;
    } catch (const PoleError& e) {
        std::cerr << "degenerate: " << e.what() << '\n';
        return Degenerate;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return Violation;
    }
}
