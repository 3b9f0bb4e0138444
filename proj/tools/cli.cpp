#include "cli.hpp"

#include "orthofam/asymptotic_q.hpp"
#include "orthofam/certify.hpp"
#include "orthofam/spectral.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace orthofam::cli {
namespace {

using nlohmann::json;

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

template <class E>
const std::map<E, std::string>& names();

template <>
const std::map<Command, std::string>& names()
{
    static const std::map<Command, std::string> m{
        {Command::Eval, "eval"}, {Command::Spectrum, "spectrum"}, {Command::QTable, "qtable"}, {Command::Certify, "certify"}};
    return m;
}

template <>
const std::map<FamilyTag, std::string>& names()
{
    static const std::map<FamilyTag, std::string> m{{FamilyTag::H, "H"}, {FamilyTag::G, "G"}};
    return m;
}

template <>
const std::map<PrecisionMode, std::string>& names()
{
    static const std::map<PrecisionMode, std::string> m{
        {PrecisionMode::Float, "float"}, {PrecisionMode::Extended, "extended"}, {PrecisionMode::Exact, "exact"}};
    return m;
}

template <>
const std::map<Format, std::string>& names()
{
    static const std::map<Format, std::string> m{{Format::Csv, "csv"}, {Format::Json, "json"}};
    return m;
}

template <class E>
std::string name_of(E e)
{
    return names<E>().at(e);
}

template <class E>
E parse_enum(const std::string& s, const char* what)
{
    for (const auto& [e, n] : names<E>())
        if (n == s)
            return e;
    throw InvalidParameter(std::string("unknown ") + what + " '" + s + "'");
}

template <class E>
std::map<std::string, E> choice_map()
{
    std::map<std::string, E> m;
    for (const auto& [e, n] : names<E>())
        m[n] = e;
    return m;
}

MonicCoeffs coeffs_of(const RunConfig& c)
{
    if (c.family == FamilyTag::H)
        return monic_coeffs_f1(Family1Params(c.mu, c.nu, c.alpha, c.theta)).perturbed(c.perturb_asq);
    return monic_coeffs_f2(Family2Params(c.mu, c.nu, c.sigma)).perturbed(c.perturb_asq);
}

// --- eval ----------------------------------------------------------------------

double eval_one(const RunConfig& c, int n, double z)
{
    if (c.monic) {
        const auto coeffs = coeffs_of(c);
        switch (c.precision) {
        case PrecisionMode::Float:
            return eval_monic(coeffs, n, z);
        case PrecisionMode::Extended:
            return eval_monic(coeffs, n, z, Precision::Extended);
        case PrecisionMode::Exact:
            return static_cast<double>(basic_eval_monic<Exact>(coeffs, n, Exact(z)));
        }
    }
    if (c.family == FamilyTag::H) {
        const Family1Params p(c.mu, c.nu, c.alpha, c.theta);
        switch (c.precision) {
        case PrecisionMode::Float:
            return eval_H(p, n, z);
        case PrecisionMode::Extended:
            return eval_H(p, n, z, Precision::Extended);
        case PrecisionMode::Exact:
            return static_cast<double>(basic_eval_H<Exact>(p, n, Exact(z)));
        }
    }
    const Family2Params p(c.mu, c.nu, c.sigma);
    switch (c.precision) {
    case PrecisionMode::Float:
        return eval_G(p, n, z);
    case PrecisionMode::Extended:
        return eval_G(p, n, z, Precision::Extended);
    case PrecisionMode::Exact:
        return static_cast<double>(basic_eval_G<Exact>(p, n, Exact(z)));
    }
    return 0.0;
}

Outcome cmd_eval(const RunConfig& c)
{
    Outcome o;
    std::ostringstream csv;
    json rows = json::array();
    csv << "n,z,value\n";
    for (int n = 0; n <= c.n; ++n)
        for (double z : c.z_grid) {
            const double v = eval_one(c, n, z);
            csv << n << ',' << fmt17(z) << ',' << fmt17(v) << '\n';
            rows.push_back({{"n", n}, {"z", z}, {"value", v}});
        }
    if (c.format == Format::Csv)
        o.data = csv.str();
    else
        o.data = json{{"family", name_of(c.family)}, {"monic", c.monic}, {"rows", rows}}.dump(2) + "\n";
    return o;
}

// --- spectrum ----------------------------------------------------------------------

Outcome cmd_spectrum(const RunConfig& c)
{
    Outcome o;
    const auto coeffs = coeffs_of(c);
    const SpectralData s = c.precision == PrecisionMode::Extended ? eigensystem_extended(coeffs, c.N)
                                                                  : eigensystem(build_operator(coeffs, c.N));
    for (const auto& w : s.warnings)
        o.diagnostics += "warning: " + w + "\n";
    std::optional<TraceDiagnostic> trace;
    if (c.family == FamilyTag::H)
        trace = trace_diagnostic(coeffs, c.N);

    if (c.format == Format::Csv) {
        std::ostringstream csv;
        csv << "k,node,weight" << (trace ? ",abs_eig_sum,tail_estimate" : "") << '\n';
        for (int k = 0; k < s.size(); ++k) {
            csv << k << ',' << fmt17(s.nodes[k]) << ',' << fmt17(s.weights[k]);
            if (trace)
                csv << ',' << fmt17(trace->abs_eig_sum) << ',' << fmt17(trace->tail_estimate);
            csv << '\n';
        }
        o.data = csv.str();
    } else {
        json j{{"family", name_of(c.family)}, {"N", c.N}, {"nodes", s.nodes}, {"weights", s.weights},
               {"warnings", s.warnings}};
        if (trace) {
            j["abs_eig_sum"] = trace->abs_eig_sum;
            j["tail_estimate"] = trace->tail_estimate;
        }
        o.data = j.dump(2) + "\n";
    }
    return o;
}

// --- qtable ---------------------------------------------------------------------

Outcome cmd_qtable(const RunConfig& c)
{
    if (c.family != FamilyTag::H)
        throw PreconditionError("qtable: the limit function Q is defined for family H only");
    Outcome o;
    const auto coeffs = coeffs_of(c);
    const QCoeffTable table(coeffs, c.nmax, c.kmax);
    const double radius = certified_radius(table, c.tol);
    const auto env = gronwall_envelope(table.sums(), c.radius);
    if (table.unconverged_columns() > 0)
        o.diagnostics += "warning: " + std::to_string(table.unconverged_columns())
                         + " coefficient columns not converged at nmax = " + std::to_string(c.nmax) + "\n";
    if (radius < c.radius)
        throw RadiusExceeded("qtable: requested radius " + fmt17(c.radius) + " exceeds the certified radius "
                             + fmt17(radius) + " at tolerance " + fmt17(c.tol));

    std::vector<double> zs{0.0};
    for (double z : c.z_grid)
        if (z != 0.0)
            zs.push_back(z);
    std::vector<QValue> values;
    for (double z : zs)
        values.push_back(eval_Q_limit(table, Complex(z, 0.0), c.tol));

    if (c.format == Format::Csv) {
        std::ostringstream csv;
        csv << "k,c_k,spread,converged\n";
        for (int k = 0; k <= table.k_max(); ++k)
            csv << k << ',' << fmt17(table.limit(k)) << ',' << fmt17(table.spread(k)) << ','
                << (table.converged(k) ? 1 : 0) << '\n';
        csv << "\nz,Q,tail_bound\n";
        for (std::size_t i = 0; i < zs.size(); ++i)
            csv << fmt17(zs[i]) << ',' << fmt17(values[i].value.real()) << ',' << fmt17(values[i].tail_bound)
                << '\n';
        csv << "\nR,M,certified_radius\n" << fmt17(env.R) << ',' << fmt17(env.M) << ',' << fmt17(radius) << '\n';
        if (c.full_table) {
            csv << "\nn,k,c\n";
            for (int n = 0; n <= table.n_max(); ++n)
                for (int k = 0; k <= table.k_max(); ++k)
                    csv << n << ',' << k << ',' << fmt17(table.at(n, k)) << '\n';
        }
        o.data = csv.str();
    } else {
        json coeffs_j = json::array(), evals = json::array();
        for (int k = 0; k <= table.k_max(); ++k)
            coeffs_j.push_back({{"k", k}, {"c_k", table.limit(k)}, {"spread", table.spread(k)},
                                {"converged", table.converged(k)}});
        for (std::size_t i = 0; i < zs.size(); ++i)
            evals.push_back({{"z", zs[i]}, {"Q", values[i].value.real()}, {"tail_bound", values[i].tail_bound}});
        json j{{"coefficients", coeffs_j},
               {"unconverged_columns", table.unconverged_columns()},
               {"evaluations", evals},
               {"gronwall", {{"R", env.R}, {"M", env.M}}},
               {"certified_radius", radius}};
        if (c.full_table) {
            json rows = json::array();
            for (int n = 0; n <= table.n_max(); ++n) {
                json row = json::array();
                for (int k = 0; k <= table.k_max(); ++k)
                    row.push_back(table.at(n, k));
                rows.push_back(row);
            }
            j["table"] = rows;
        }
        o.data = j.dump(2) + "\n";
    }
    return o;
}

// --- certify ---------------------------------------------------------------------

Outcome cmd_certify(const RunConfig& c)
{
    Outcome o;
    const auto results = run_checks(c.checks, CertifyOptions{c.perturb_asq});
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        if (!r.pass)
            o.diagnostics += "FAIL " + r.id + ": worst " + fmt17(r.worst) + " vs " + fmt17(r.threshold) + "; "
                             + r.detail + "\n";
    }
    if (c.format == Format::Csv) {
        std::ostringstream csv;
        csv << "check,pass,worst,threshold,detail\n";
        for (const auto& r : results)
            csv << r.id << ',' << (r.pass ? "PASS" : "FAIL") << ',' << fmt17(r.worst) << ',' << fmt17(r.threshold)
                << ',' << csv_quote(r.detail) << '\n';
        csv << "verdict," << (all ? "PASS" : "FAIL") << ",,,"
            << csv_quote(std::string("wilson argument ") + wilson_argument_name(kWilsonArgument)) << '\n';
        o.data = csv.str();
    } else {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"id", r.id},
                              {"name", r.name},
                              {"pass", r.pass},
                              {"worst", r.worst},
                              {"threshold", r.threshold},
                              {"detail", r.detail}});
        o.data = json{{"wilson_argument", wilson_argument_name(kWilsonArgument)},
                      {"checks", checks},
                      {"verdict", all ? "pass" : "fail"}}
                     .dump(2)
                 + "\n";
    }
    o.exit_code = all ? exit_code::ok : exit_code::certify_failed;
    return o;
}

} // namespace

// --- configuration --------------------------------------------------------------

nlohmann::json to_json(const RunConfig& c)
{
    return json{{"command", name_of(c.command)},
                {"family", name_of(c.family)},
                {"mu", c.mu},
                {"nu", c.nu},
                {"alpha", c.alpha},
                {"theta", c.theta},
                {"sigma", c.sigma},
                {"n", c.n},
                {"N", c.N},
                {"z_grid", c.z_grid},
                {"radius", c.radius},
                {"kmax", c.kmax},
                {"nmax", c.nmax},
                {"precision", name_of(c.precision)},
                {"format", name_of(c.format)},
                {"out", c.out},
                {"tol", c.tol},
                {"monic", c.monic},
                {"full_table", c.full_table},
                {"checks", c.checks},
                {"perturb_asq", c.perturb_asq}};
}

RunConfig config_from_json(const nlohmann::json& j)
{
    RunConfig c;
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key))
            j.at(key).get_to(field);
    };
    auto get_enum = [&](const char* key, auto& field) {
        if (j.contains(key))
            field = parse_enum<std::decay_t<decltype(field)>>(j.at(key).get<std::string>(), key);
    };
    try {
        get_enum("command", c.command);
        get_enum("family", c.family);
        get("mu", c.mu);
        get("nu", c.nu);
        get("alpha", c.alpha);
        get("theta", c.theta);
        get("sigma", c.sigma);
        get("n", c.n);
        get("N", c.N);
        get("z_grid", c.z_grid);
        get("radius", c.radius);
        get("kmax", c.kmax);
        get("nmax", c.nmax);
        get_enum("precision", c.precision);
        get_enum("format", c.format);
        get("out", c.out);
        get("tol", c.tol);
        get("monic", c.monic);
        get("full_table", c.full_table);
        get("checks", c.checks);
        get("perturb_asq", c.perturb_asq);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter(std::string("config: ") + e.what());
    }
    return c;
}

std::vector<double> parse_grid(const std::string& text)
{
    auto to_double = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw InvalidParameter("z-grid: cannot parse '" + s + "' in '" + text + "'");
        return v;
    };
    std::vector<std::string> parts;
    const char sep = text.find(':') != std::string::npos ? ':' : ',';
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, sep);)
        parts.push_back(item);
    if (sep == ':') {
        if (parts.size() != 3)
            throw InvalidParameter("z-grid: expected lo:hi:count, got '" + text + "'");
        const double count = to_double(parts[2]);
        if (!(count >= 1.0) || count != std::floor(count) || count > 1e7)
            throw InvalidParameter("z-grid: count must be a positive integer, got '" + parts[2] + "'");
        return linspace(to_double(parts[0]), to_double(parts[1]), static_cast<int>(count));
    }
    std::vector<double> out;
    for (const auto& p : parts)
        out.push_back(to_double(p));
    if (out.empty())
        throw InvalidParameter("z-grid: empty");
    return out;
}

void validate(const RunConfig& c)
{
    auto require = [](bool ok, const std::string& what) {
        if (!ok)
            throw InvalidParameter(what);
    };
    require(c.family == FamilyTag::H || c.family == FamilyTag::G, "family must be H or G");
    if (c.family == FamilyTag::H)
        (void)Family1Params(c.mu, c.nu, c.alpha, c.theta);
    else
        (void)Family2Params(c.mu, c.nu, c.sigma);
    require(c.tol > 0.0 && std::isfinite(c.tol), "tol must be > 0");
    require(std::isfinite(c.perturb_asq) && c.perturb_asq > -1.0, "perturb-asq must be finite and > -1");
    switch (c.command) {
    case Command::Eval:
        require(c.n >= 0, "n must be >= 0");
        require(!c.z_grid.empty(), "z-grid must not be empty");
        for (double z : c.z_grid)
            require(std::isfinite(z), "z-grid values must be finite");
        break;
    case Command::Spectrum:
        require(c.N >= 1, "N must be >= 1");
        require(c.precision != PrecisionMode::Exact, "spectrum supports float or extended precision");
        break;
    case Command::QTable:
        require(c.kmax >= 0 && c.nmax >= 1 && c.kmax <= c.nmax, "need 0 <= kmax <= nmax and nmax >= 1");
        require(c.radius > 0.0 && std::isfinite(c.radius), "radius must be > 0");
        require(c.precision == PrecisionMode::Float, "qtable supports float precision");
        for (double z : c.z_grid)
            require(std::isfinite(z), "z-grid values must be finite");
        break;
    case Command::Certify:
        break;
    }
}

Outcome run(const RunConfig& c)
{
    try {
        validate(c);
        switch (c.command) {
        case Command::Eval:
            return cmd_eval(c);
        case Command::Spectrum:
            return cmd_spectrum(c);
        case Command::QTable:
            return cmd_qtable(c);
        case Command::Certify:
            return cmd_certify(c);
        }
    } catch (const IterationFailure& e) {
        return {exit_code::eigensolver, "", std::string("error: ") + e.what() + "\n"};
    } catch (const RadiusExceeded& e) {
        return {exit_code::radius, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::logic_error& e) {
        // InvalidParameter, PreconditionError, DegenerateRecurrence, StructuralError
        return {exit_code::validation, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {exit_code::io, "", std::string("error: ") + e.what() + "\n"};
    }
    return {};
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    // A --config file supplies the base configuration; explicit flags override it.
    for (int i = 1; i + 1 < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in) {
                err << "error: cannot read config '" << argv[i + 1] << "'\n";
                return exit_code::io;
            }
            try {
                cfg = config_from_json(json::parse(in));
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return exit_code::validation;
            }
        }
    }

    CLI::App app{"Evaluation, spectra, limit functions and certification for two orthogonal polynomial families"};
    app.require_subcommand(1);
    std::string config_path, save_config, z_grid;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON RunConfig used as the base configuration");
        sub->add_option("--save-config", save_config, "write the effective RunConfig as JSON");
        sub->add_option("--family", cfg.family, "H or G")->transform(CLI::CheckedTransformer(choice_map<FamilyTag>()));
        sub->add_option("--mu", cfg.mu);
        sub->add_option("--nu", cfg.nu);
        sub->add_option("--alpha", cfg.alpha, "family H");
        sub->add_option("--theta", cfg.theta, "family H, radians in (0, pi)");
        sub->add_option("--sigma", cfg.sigma, "family G");
        sub->add_option("--n", cfg.n, "largest degree");
        sub->add_option("--N", cfg.N, "truncation size");
        sub->add_option("--z-grid", z_grid, "lo:hi:count or comma-separated values");
        sub->add_option("--radius", cfg.radius, "evaluation radius for Q");
        sub->add_option("--kmax", cfg.kmax);
        sub->add_option("--nmax", cfg.nmax);
        sub->add_option("--precision", cfg.precision, "float, extended or exact")
            ->transform(CLI::CheckedTransformer(choice_map<PrecisionMode>()));
        sub->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(choice_map<Format>()));
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--tol", cfg.tol, "tail tolerance for Q");
        sub->add_flag("--monic", cfg.monic, "evaluate the monic polynomials");
        sub->add_flag("--full-table", cfg.full_table, "qtable: export every row of c[n][k]");
        sub->add_option("--checks", cfg.checks, "certify: subset of check ids")->delimiter(',');
        sub->add_option("--perturb-asq", cfg.perturb_asq, "relative perturbation of every a_n^2");
    };
    std::map<CLI::App*, Command> commands;
    auto add_command = [&](const char* name, const char* help, Command cmd) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        commands[sub] = cmd;
    };
    add_command("eval", "evaluate H_n / G_n (or monic P_n) on a z grid", Command::Eval);
    add_command("spectrum", "nodes and weights of the N-truncation", Command::Spectrum);
    add_command("qtable", "coefficients and values of the limit function Q", Command::QTable);
    add_command("certify", "run the certification checks", Command::Certify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? exit_code::ok : exit_code::validation;
    }
    for (const auto& [sub, cmd] : commands)
        if (sub->parsed())
            cfg.command = cmd;
    if (!z_grid.empty()) {
        try {
            cfg.z_grid = parse_grid(z_grid);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return exit_code::validation;
        }
    }
    if (!save_config.empty()) {
        std::ofstream f(save_config);
        if (!(f << to_json(cfg).dump(2) << "\n")) {
            err << "error: cannot write config '" << save_config << "'\n";
            return exit_code::io;
        }
    }

    const Outcome o = run(cfg);
    err << o.diagnostics;
    if (!o.data.empty()) {
        if (cfg.out.empty()) {
            out << o.data;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!(f << o.data)) {
                err << "error: cannot write '" << cfg.out << "'\n";
                return exit_code::io;
            }
        }
    }
    return o.exit_code;
}

} // namespace orthofam::cli
