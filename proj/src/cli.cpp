#include "ghw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ghw/error.hpp"
#include "ghw/weights.hpp"

namespace ghw::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint32_t parse_uint(std::string_view token, std::size_t line, std::string_view what) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        syntax(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                         std::string(token) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto next = s.find(sep, pos);
        const auto end = next == std::string_view::npos ? s.size() : next;
        out.push_back(s.substr(pos, end - pos));
        pos = end + 1;
    }
    return out;
}

std::vector<std::string_view> words(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        pos = s.find_first_not_of(" \t\r", pos);
        if (pos == std::string_view::npos) break;
        auto end = s.find_first_of(" \t\r", pos);
        if (end == std::string_view::npos) end = s.size();
        out.push_back(s.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

FiniteField parse_header(std::string_view body, std::size_t line) {
    std::optional<std::uint32_t> p;
    std::uint32_t s = 1;
    std::optional<std::vector<std::uint32_t>> modulus;
    for (auto tok : words(body)) {
        const auto eq = tok.find('=');
        if (eq == std::string_view::npos) syntax(line, "expected key=value, got '" + std::string(tok) + "'");
        const auto key = tok.substr(0, eq);
        const auto value = tok.substr(eq + 1);
        if (key == "p") {
            p = parse_uint(value, line, "p");
        } else if (key == "s") {
            s = parse_uint(value, line, "s");
        } else if (key == "modulus") {
            std::vector<std::uint32_t> coeffs;
            for (auto c : split(value, ',')) coeffs.push_back(parse_uint(c, line, "modulus"));
            modulus = std::move(coeffs);
        } else {
            syntax(line, "unknown field key '" + std::string(key) + "'");
        }
    }
    if (!p) syntax(line, "field header needs p=<prime>");
    try {
        return FiniteField::build(*p, s, modulus);
    } catch (const Error& e) {
        throw Error(ErrorKind::FieldError, "line " + std::to_string(line) + ": " + e.what());
    }
}

std::string to_text(const BigInt& v) { return v.str(); }

json to_json(const BigInt& v) {
    if (v <= std::numeric_limits<std::uint64_t>::max()) return json(v.convert_to<std::uint64_t>());
    return json(v.str());
}

std::string join(const Hierarchy& h) {
    std::string out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(h[i]);
    }
    return out;
}

std::string format_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << ms;
    return os.str();
}

// Shared flags, bound to one subcommand each.
struct Flags {
    std::size_t r = 1;
    bool low_mem = false;
    bool verbose = false;
    bool as_json = false;
    std::string algorithm = "bz";
    std::uint64_t work_limit = 1'000'000'000;
    unsigned threads = 0;
    bool csv = false;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_flag("--low-mem", f.low_mem, "Regenerate subspace lists per support");
    sub->add_flag("--verbose", f.verbose, "Print one progress line per round to stderr");
    sub->add_flag("--json", f.as_json, "Print a JSON object instead of text");
    sub->add_option("--algorithm", f.algorithm, "bz or naive")
        ->check(CLI::IsMember({"bz", "naive"}));
    sub->add_option("--work-limit", f.work_limit, "Largest Gaussian binomial a spectrum may enumerate");
    sub->add_option("--threads", f.threads, "Worker threads, 0 = all cores");
}

ComputeOptions options_from(const Flags& f, std::ostream& err) {
    ComputeOptions o;
    o.low_mem = f.low_mem;
    o.verbose = f.verbose;
    o.threads = f.threads;
    o.work_limit = f.work_limit;
    if (f.verbose) {
        o.progress = [&err](const RoundEvent& ev) {
            err << "w=" << ev.w << " lower=" << ev.lower << " upper=" << ev.upper
                << " mats=" << ev.active_matrices << " subspaces=" << ev.subspaces
                << " t=" << format_ms(ev.elapsed_ms) << '\n';
        };
    }
    return o;
}

json code_fields(const std::string& op, const LinearCode& c) {
    return json{{"op", op}, {"n", c.n()}, {"k", c.k()}, {"q", c.field().q()}};
}

Hierarchy naive_hierarchy(const LinearCode& c, bool low_mem) {
    Hierarchy h;
    for (std::size_t r = 1; r <= c.k(); ++r) h.push_back(naive_ghw(c, r, low_mem));
    return h;
}

Hierarchy naive_rhierarchy(const LinearCode& c1, const LinearCode& c2, bool low_mem) {
    Hierarchy h;
    if (!c1.contains(c2)) throw Error(ErrorKind::NotNested, "second code is not a subcode of the first");
    for (std::size_t r = 1; r + c2.k() <= c1.k(); ++r) h.push_back(naive_rghw(c1, c2, r, low_mem));
    return h;
}

void print_spectrum(const std::string& op, const LinearCode& c, const Spectrum& sp, bool as_json,
                    double ms, std::ostream& out) {
    if (as_json) {
        json j = code_fields(op, c);
        json counts = json::array();
        for (std::size_t r = 0; r < sp.counts.size(); ++r) {
            json a = json::object();
            for (const auto& [w, v] : sp.counts[r]) a[std::to_string(w)] = to_json(v);
            counts.push_back(json{{"r", r}, {"counts", a}});
        }
        j["spectrum"] = counts;
        j["elapsed_ms"] = ms;
        out << j.dump() << '\n';
        return;
    }
    for (std::size_t r = 0; r < sp.counts.size(); ++r) {
        out << "r=" << r << ':';
        for (const auto& [w, v] : sp.counts[r]) out << ' ' << w << ':' << to_text(v);
        out << '\n';
    }
}

int dispatch(const std::string& cmd, const Flags& f, const std::vector<std::string>& files,
             const std::vector<std::size_t>& numbers, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const ComputeOptions opts = options_from(f, err);
    const bool naive = f.algorithm == "naive";

    if (cmd == "duality") {
        if (numbers.empty()) throw Error(ErrorKind::UsageError, "duality needs <n> followed by the hierarchy");
        const Hierarchy h(numbers.begin() + 1, numbers.end());
        const Hierarchy d = wei_duality(h, numbers.front());
        if (f.as_json) {
            out << json{{"op", "duality"}, {"n", numbers.front()}, {"values", d}, {"elapsed_ms", ms_since(start)}}.dump()
                << '\n';
        } else {
            out << join(d) << '\n';
        }
        return 0;
    }

    if (cmd == "benchmark") {
        std::vector<std::pair<std::string, LinearCode>> codes;
        for (const auto& path : files) codes.emplace_back(path, load_code_file(path));
        const auto rows = benchmark(codes, f.r, f.low_mem, f.threads);
        if (f.as_json) {
            json arr = json::array();
            for (const auto& row : rows) {
                arr.push_back(json{{"code", row.id}, {"r", row.r}, {"value", row.value}, {"bz_ms", row.bz_ms},
                                   {"naive_ms", row.naive_ms}, {"speedup", row.speedup}});
            }
            out << json{{"op", "benchmark"}, {"results", arr}}.dump() << '\n';
        } else if (f.csv) {
            out << "code,r,value,bz_ms,naive_ms,speedup\n";
            for (const auto& row : rows) {
                out << row.id << ',' << row.r << ',' << row.value << ',' << row.bz_ms << ',' << row.naive_ms << ','
                    << row.speedup << '\n';
            }
        } else {
            for (const auto& row : rows) {
                out << row.id << "  r=" << row.r << "  value=" << row.value << "  bz_ms=" << format_ms(row.bz_ms)
                    << "  naive_ms=" << format_ms(row.naive_ms) << "  speedup=" << std::setprecision(3)
                    << row.speedup << '\n';
            }
        }
        return 0;
    }

    const LinearCode c1 = load_code_file(files.at(0));

    if (cmd == "ghw" || cmd == "mindist") {
        const std::size_t r = cmd == "mindist" ? 1 : f.r;
        const std::size_t value = naive ? naive_ghw(c1, r, f.low_mem) : ghw(c1, r, opts);
        if (f.as_json) {
            json j = code_fields(cmd, c1);
            j["r"] = r;
            j["value"] = value;
            j["elapsed_ms"] = ms_since(start);
            out << j.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return 0;
    }
    if (cmd == "hierarchy") {
        const Hierarchy h = naive ? naive_hierarchy(c1, f.low_mem) : hierarchy(c1, opts);
        if (f.as_json) {
            json j = code_fields(cmd, c1);
            j["values"] = h;
            j["elapsed_ms"] = ms_since(start);
            out << j.dump() << '\n';
        } else {
            out << join(h) << '\n';
        }
        return 0;
    }
    if (cmd == "spectrum") {
        const Spectrum sp = higher_spectrum(c1, opts);
        print_spectrum(cmd, c1, sp, f.as_json, ms_since(start), out);
        return 0;
    }

    const LinearCode c2 = load_code_file(files.at(1));
    if (cmd == "rghw") {
        const std::size_t value = naive ? naive_rghw(c1, c2, f.r, f.low_mem) : rghw(c1, c2, f.r, opts);
        if (f.as_json) {
            json j = code_fields(cmd, c1);
            j["k2"] = c2.k();
            j["r"] = f.r;
            j["value"] = value;
            j["elapsed_ms"] = ms_since(start);
            out << j.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return 0;
    }
    if (cmd == "rhierarchy") {
        const Hierarchy h = naive ? naive_rhierarchy(c1, c2, f.low_mem) : rhierarchy(c1, c2, opts);
        if (f.as_json) {
            json j = code_fields(cmd, c1);
            j["k2"] = c2.k();
            j["values"] = h;
            j["elapsed_ms"] = ms_since(start);
            out << j.dump() << '\n';
        } else {
            out << join(h) << '\n';
        }
        return 0;
    }
    if (cmd == "rspectrum") {
        const Spectrum sp = rhigher_spectrum(c1, c2, opts);
        print_spectrum(cmd, c1, sp, f.as_json, ms_since(start), out);
        return 0;
    }
    throw Error(ErrorKind::UsageError, "unknown command '" + cmd + "'");
}

}  // namespace

LinearCode parse_code_file(std::string_view text) {
    std::optional<FiniteField> field;
    std::vector<std::vector<std::uint32_t>> rows;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        const auto hash = raw.find('#');
        const auto line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (!field) {
            constexpr std::string_view tag = "field:";
            if (line.substr(0, tag.size()) != tag) syntax(line_no, "expected 'field: p=<p> s=<s>' header");
            field = parse_header(line.substr(tag.size()), line_no);
            continue;
        }
        std::vector<std::uint32_t> row;
        for (auto tok : words(line)) {
            const std::uint32_t v = parse_uint(tok, line_no, "matrix entry");
            if (v >= field->q()) {
                syntax(line_no, "entry " + std::to_string(v) + " is not in [0, " + std::to_string(field->q()) + ")");
            }
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            syntax(line_no, "row has " + std::to_string(row.size()) + " entries, expected " +
                                std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (!field) syntax(line_no, "missing field header");
    if (rows.empty()) syntax(line_no, "no matrix rows");
    return LinearCode(MatrixGF::from_rows(*field, rows));
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::UsageError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_code_file(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

std::string format_code_file(const LinearCode& c) {
    const FiniteField& f = c.field();
    std::ostringstream os;
    os << "field: p=" << f.p() << " s=" << f.s();
    if (f.s() > 1) {
        os << " modulus=";
        for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
    }
    os << '\n';
    for (const auto& row : c.generator().to_rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
        os << '\n';
    }
    return os.str();
}

std::vector<BenchmarkRow> benchmark(const std::vector<std::pair<std::string, LinearCode>>& codes,
                                    std::size_t r, bool low_mem, unsigned threads) {
    std::vector<BenchmarkRow> rows;
    for (const auto& [id, c] : codes) {
        ComputeOptions opts;
        opts.low_mem = low_mem;
        opts.threads = threads;
        auto start = Clock::now();
        const std::size_t bz = ghw(c, r, opts);
        const double bz_ms = ms_since(start);
        start = Clock::now();
        const std::size_t nv = naive_ghw(c, r, low_mem);
        const double naive_ms = ms_since(start);
        if (bz != nv) {
            throw Error(ErrorKind::MismatchedResults, id + ": ghw returned " + std::to_string(bz) +
                                                          " but the naive search returned " + std::to_string(nv));
        }
        rows.push_back({id, r, bz, bz_ms, naive_ms, bz_ms > 0 ? naive_ms / bz_ms : 0.0});
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Hamming weights of linear codes over finite fields", "ghw"};
    app.require_subcommand(1);

    Flags flags;
    std::vector<std::string> files;
    std::vector<std::size_t> numbers;

    struct Command {
        const char* name;
        const char* help;
        int code_files;  // -1 = one or more
        bool has_r;
    };
    const Command commands[] = {
        {"ghw", "r-th generalized Hamming weight", 1, true},
        {"mindist", "minimum distance (ghw -r 1)", 1, false},
        {"hierarchy", "weight hierarchy d_1..d_k", 1, false},
        {"rghw", "r-th relative GHW of C1 over its subcode C2", 2, true},
        {"rhierarchy", "relative weight hierarchy", 2, false},
        {"spectrum", "higher weight spectra A_w^(r)", 1, false},
        {"rspectrum", "relative higher weight spectra", 2, false},
        {"benchmark", "time ghw against the naive search", -1, true},
    };
    for (const auto& s : commands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        auto* files_opt = sub->add_option("files", files, "Code files")->required();
        if (s.code_files > 0) files_opt->expected(s.code_files);
        if (s.has_r) sub->add_option("-r", flags.r, "Subcode dimension")->check(CLI::PositiveNumber);
        add_common(sub, flags);
        if (std::string_view(s.name) == "benchmark") sub->add_flag("--csv", flags.csv, "Print CSV");
    }
    CLI::App* dual_cmd = app.add_subcommand("duality", "dual hierarchy from a hierarchy: duality <n> <d...>");
    dual_cmd->add_option("values", numbers, "n followed by the hierarchy")->required();
    dual_cmd->add_flag("--json", flags.as_json, "Print a JSON object instead of text");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("ghw");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            for (auto* sub : app.get_subcommands()) out << sub->help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), flags, files, numbers, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::UsageError ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ghw::cli
