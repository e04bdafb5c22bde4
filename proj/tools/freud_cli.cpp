#include "freud/freud.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <locale>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kPrecondition = 1, kNumeric = 2, kVerifyFailures = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    ApiError(freud_status s, const std::string& what) : std::runtime_error(what), status(s) {}
    freud_status status;
};

struct CtxDeleter {
    void operator()(freud_ctx* c) const { freud_ctx_destroy(c); }
};
struct TableDeleter {
    void operator()(freud_table* t) const { freud_table_destroy(t); }
};
using CtxPtr = std::unique_ptr<freud_ctx, CtxDeleter>;
using TablePtr = std::unique_ptr<freud_table, TableDeleter>;

void check(freud_status s) {
    if (s != FREUD_OK) throw ApiError(s, freud_last_error());
}

struct Config {
    std::string beta, alpha = "0", mu, mu_min, mu_max;
    unsigned mu_steps = 0;
    std::vector<unsigned> n_list;
    std::vector<std::string> s;
    unsigned digits = 60;
    unsigned nodes = 200;
    std::string guard_m = "10";
    std::string out;
    std::string format = "csv";
};

std::string need(const std::string& value, const char* flag, const std::string& command) {
    if (value.empty()) throw UsageError(command + " requires " + flag);
    return value;
}

const std::vector<unsigned>& need_n(const Config& c, const std::string& command) {
    if (c.n_list.empty()) throw UsageError(command + " requires --n or --n-list");
    return c.n_list;
}

const std::vector<std::string>& need_s(const Config& c, const std::string& command) {
    if (c.s.empty()) throw UsageError(command + " requires --s");
    return c.s;
}

// Log-spaced grid; the endpoints are passed through verbatim.
std::vector<std::string> mu_grid(const Config& c, const std::string& command) {
    const bool ranged = !c.mu_min.empty() || !c.mu_max.empty() || c.mu_steps != 0;
    if (!ranged) return {need(c.mu, "--mu", command)};
    if (!c.mu.empty()) throw UsageError("--mu cannot be combined with --mu-min/--mu-max/--mu-steps");
    if (c.mu_min.empty() || c.mu_max.empty() || c.mu_steps < 2)
        throw UsageError("a mu grid needs --mu-min, --mu-max and --mu-steps >= 2");
    long double lo, hi;
    try {
        lo = std::stold(c.mu_min);
        hi = std::stold(c.mu_max);
    } catch (const std::exception&) {
        throw UsageError("--mu-min/--mu-max must be numbers");
    }
    if (!(lo > 0) || !(hi > lo)) throw UsageError("mu grid needs 0 < mu-min < mu-max");
    std::vector<std::string> grid{c.mu_min};
    const long double step = (std::log(hi) - std::log(lo)) / (c.mu_steps - 1);
    for (unsigned i = 1; i + 1 < c.mu_steps; ++i) {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os.precision(18);
        os << std::exp(std::log(lo) + step * i);
        grid.push_back(os.str());
    }
    grid.push_back(c.mu_max);
    return grid;
}

class Collector {
public:
    void add(freud_table* t) {
        TablePtr owned(t);
        if (!acc_)
            acc_ = std::move(owned);
        else
            check(freud_table_append(acc_.get(), owned.get()));
    }
    const freud_table* get() const { return acc_.get(); }

private:
    TablePtr acc_;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void write_csv(std::ostream& os, const freud_table* t) {
    const size_t cols = freud_table_cols(t);
    for (size_t j = 0; j < cols; ++j) os << (j ? "," : "") << csv_field(freud_table_column(t, j));
    os << "\n";
    for (size_t i = 0; i < freud_table_rows(t); ++i) {
        for (size_t j = 0; j < cols; ++j) os << (j ? "," : "") << csv_field(freud_table_cell(t, i, j));
        os << "\n";
    }
}

bool json_number(const std::string& s) {
    static const std::regex re(R"(-?(0|[1-9][0-9]*)(\.[0-9]+)?([eE][+-]?[0-9]+)?)");
    return std::regex_match(s, re);
}

// Numbers keep every digit, so rows are serialized by hand; nlohmann handles string escaping.
void write_json(std::ostream& os, const freud_table* t, const std::string& command, unsigned digits) {
    using nlohmann::json;
    os << "{\n  \"schema\": \"freud-gap/1\",\n  \"command\": " << json(command).dump()
       << ",\n  \"digits\": " << digits << ",\n  \"rows\": [";
    const size_t cols = freud_table_cols(t);
    for (size_t i = 0; i < freud_table_rows(t); ++i) {
        os << (i ? ",\n    {" : "\n    {");
        for (size_t j = 0; j < cols; ++j) {
            os << (j ? ", " : "") << json(freud_table_column(t, j)).dump() << ": ";
            const std::string cell = freud_table_cell(t, i, j);
            switch (freud_table_cell_kind(t, i, j)) {
            case FREUD_CELL_NUMBER:
                os << (json_number(cell) ? cell : json(cell).dump());
                break;
            case FREUD_CELL_TEXT:
                os << json(cell).dump();
                break;
            case FREUD_CELL_NULL:
                os << "null";
                break;
            }
        }
        os << "}";
    }
    os << (freud_table_rows(t) ? "\n  ]\n}\n" : "]\n}\n");
}

int run(const std::string& command, const Config& c) {
    if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
    freud_ctx* raw = nullptr;
    check(freud_ctx_create(c.digits, &raw));
    CtxPtr ctx(raw);
    Collector rows;
    freud_table* t = nullptr;
    int code = kOk;

    if (command == "eq") {
        const std::string beta = need(c.beta, "--beta", command);
        for (const auto& mu : mu_grid(c, command)) {
            check(freud_equilibrium(ctx.get(), beta.c_str(), mu.c_str(), &t));
            rows.add(t);
        }
    } else if (command == "hankel-asymp" || command == "hankel-exact") {
        const std::string beta = need(c.beta, "--beta", command);
        const auto grid = mu_grid(c, command);
        for (const auto& mu : grid)
            for (unsigned n : need_n(c, command)) {
                if (command == "hankel-asymp")
                    check(freud_hankel_asymp(ctx.get(), beta.c_str(), c.alpha.c_str(), mu.c_str(), n, &t));
                else
                    check(freud_hankel_exact(ctx.get(), beta.c_str(), c.alpha.c_str(), mu.c_str(), n, &t));
                rows.add(t);
            }
    } else if (command == "compare") {
        const std::string beta = need(c.beta, "--beta", command);
        if (!c.s.empty()) {
            for (const auto& s : c.s)
                for (unsigned n : need_n(c, command)) {
                    check(freud_compare_gap(ctx.get(), beta.c_str(), n, s.c_str(), c.guard_m.c_str(), &t));
                    rows.add(t);
                }
        } else {
            for (const auto& mu : mu_grid(c, command))
                for (unsigned n : need_n(c, command)) {
                    check(freud_compare_hankel(ctx.get(), beta.c_str(), c.alpha.c_str(), mu.c_str(), n,
                                               c.guard_m.c_str(), &t));
                    rows.add(t);
                }
        }
    } else if (command == "gap-asymp") {
        const std::string beta = need(c.beta, "--beta", command);
        for (const auto& s : need_s(c, command)) {
            check(freud_gap_asymp(ctx.get(), beta.c_str(), s.c_str(), &t));
            rows.add(t);
        }
    } else if (command == "sine-det") {
        for (const auto& s : need_s(c, command)) {
            check(freud_sine_det(ctx.get(), s.c_str(), c.nodes, &t));
            rows.add(t);
        }
    } else if (command == "zn") {
        const std::string beta = need(c.beta, "--beta", command);
        for (unsigned n : need_n(c, command)) {
            check(freud_zn(ctx.get(), beta.c_str(), n, &t));
            rows.add(t);
        }
    } else if (command == "kernel-report") {
        const std::string beta = need(c.beta, "--beta", command);
        const auto& sizes = need_n(c, command);
        check(freud_kernel_report(ctx.get(), beta.c_str(), sizes.data(), sizes.size(), &t));
        rows.add(t);
    } else if (command == "verify") {
        size_t failures = 0;
        check(freud_verify(ctx.get(), &t, &failures));
        rows.add(t);
        std::cerr << freud_table_rows(rows.get()) << " checks, " << failures << " failed\n";
        if (failures) code = kVerifyFailures;
    }

    std::ostringstream buf;
    buf.imbue(std::locale::classic());
    if (c.format == "csv")
        write_csv(buf, rows.get());
    else
        write_json(buf, rows.get(), command, c.digits);
    if (c.out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(c.out, std::ios::binary);
        f << buf.str();
        if (!f) throw std::runtime_error("cannot write " + c.out);
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Freud ensemble gap probabilities and Hankel determinants"};
    app.require_subcommand(1);
    Config c;

    struct Spec {
        const char* name;
        const char* help;
    };
    const std::vector<Spec> commands = {
        {"eq", "equilibrium support data: a, a', rho, f(a), ell"},
        {"hankel-asymp", "asymptotic log Hankel determinant and C2, C1, C0"},
        {"hankel-exact", "exact log Hankel determinant from the moment matrix"},
        {"compare", "asymptotic vs exact; Hankel by default, gap ratio with --s"},
        {"gap-asymp", "large-gap asymptotic terms"},
        {"sine-det", "sine-kernel Fredholm determinant"},
        {"zn", "asymptotic log(Z_n / n!)"},
        {"verify", "run every invariant check"},
        {"kernel-report", "rescaled kernel against the sine kernel"},
    };
    for (const auto& spec : commands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--beta", c.beta, "exponent of the weight");
        sub->add_option("--alpha", c.alpha, "half-line exponent")->capture_default_str();
        sub->add_option("--mu", c.mu, "left endpoint");
        sub->add_option("--mu-min", c.mu_min);
        sub->add_option("--mu-max", c.mu_max);
        sub->add_option("--mu-steps", c.mu_steps, "log-spaced grid points");
        sub->add_option("--n,--n-list", c.n_list, "size or comma separated sizes")->delimiter(',');
        sub->add_option("--s", c.s, "gap half-width (repeatable)");
        sub->add_option("--digits", c.digits)->capture_default_str();
        sub->add_option("--nodes", c.nodes, "Nystrom nodes")->capture_default_str();
        sub->add_option("--guard-M", c.guard_m, "window guard")->capture_default_str();
        sub->add_option("--out", c.out, "output file (stdout if omitted)");
        sub->add_option("--format", c.format, "csv or json")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.status == FREUD_ERR_DOMAIN || e.status == FREUD_ERR_ARGUMENT ? kPrecondition : kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumeric;
    }
}
