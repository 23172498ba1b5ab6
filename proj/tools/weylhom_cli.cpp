#include "weylhom/criterion.hpp"
#include "weylhom/ext_classical.hpp"
#include "weylhom/json_io.hpp"
#include "weylhom/loubert.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

using namespace weylhom;
using nlohmann::json;

namespace {

// exit code contract: 0 = success/agreement, 1 = criterion/oracle
// disagreement, 2 = usage error
constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

std::vector<Prime> parse_primes(const std::string& list) {
    std::vector<Prime> out;
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        std::string tok =
            list.substr(pos, (comma == std::string::npos ? list.size() : comma) - pos);
        if (tok.empty())
            throw std::invalid_argument("empty entry in prime list");
        out.emplace_back(std::stol(tok));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw std::invalid_argument("empty prime list");
    return out;
}

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void print_hom_text(const HomReport& rep, std::ostream& os) {
    os << "case = " << rep.case_tag << "\n";
    os << "dim  = " << rep.dim << "\n";
    if (!rep.conditions.empty()) {
        os << "conditions (all must be divisible by p):\n";
        for (const auto& c : rep.conditions)
            os << "  [" << (c.divisible ? "ok" : "NO") << "] " << c.description
               << "  value " << c.value.get_str() << "\n";
    }
    if (!rep.witness.empty()) {
        os << "witness coefficients mod p:\n";
        for (const auto& [idx, val] : rep.witness)
            os << "  " << leg_index_label(idx) << ": " << val << "\n";
    }
}

int cmd_hom(const std::string& lambda_str, const std::string& hook_str, long p_raw,
            bool with_oracle, const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const Partition lam = Partition::parse(lambda_str);
    const Hook h = Hook::parse(hook_str);
    const Prime p(p_raw);

    const HomReport rep = hom_dim_criterion(lam, h, p);
    int oracle_dim = -1;
    if (with_oracle)
        oracle_dim = hom_dim_oracle(lam, h, p).dim;
    const bool agree = !with_oracle || oracle_dim == rep.dim;

    if (format == "json") {
        json j = to_json(rep);
        j["command"] = "hom";
        j["lambda"] = lam.to_string();
        j["hook"] = h.to_string();
        j["p"] = p.value();
        if (with_oracle) {
            j["oracle_dim"] = oracle_dim;
            j["agree"] = agree;
        }
        j["timing_ms"] = ms_since(start);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lambda = " << lam.to_string() << "\n"
                  << "hook = " << h.to_string() << "\n"
                  << "p = " << p.value() << "\n";
        print_hom_text(rep, std::cout);
        if (with_oracle)
            std::cout << "oracle dim = " << oracle_dim << " ("
                      << (agree ? "agrees" : "DISAGREES") << ")\n";
        std::cout << "time = " << ms_since(start) << " ms\n";
    }
    if (!agree) {
        std::cerr << "error: criterion and oracle disagree\n";
        return kExitDisagree;
    }
    return kExitOk;
}

int cmd_sweep(int r, const std::string& primes_str, const std::string& out_path,
              int cap, const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    if (r < 1 || r > cap)
        throw std::invalid_argument("sweep degree must satisfy 1 <= r <= " +
                                    std::to_string(cap) + " (see --cap)");
    const std::vector<Prime> primes = parse_primes(primes_str);

    unsigned threads = std::thread::hardware_concurrency();
    threads = std::min(std::max(threads, 1u), 8u);
    const std::vector<SweepRow> rows = sweep_compare(r, primes, threads);

    size_t disagreements = 0;
    std::ofstream file;
    std::ostream* csv = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary); // LF line endings everywhere
        if (!file)
            throw std::invalid_argument("cannot open '" + out_path + "' for writing");
        csv = &file;
    }
    *csv << "lambda,hook,p,dim_theorem,dim_oracle,agree,case\n";
    for (const SweepRow& row : rows) {
        if (!row.agree())
            ++disagreements;
        *csv << csv_quote(row.lambda.to_string()) << ','
             << csv_quote(row.hook.to_string()) << ',' << row.p << ','
             << row.dim_criterion << ',' << row.dim_oracle << ','
             << (row.agree() ? "true" : "false") << ',' << row.case_tag << "\n";
    }
    if (file.is_open())
        file.close();

    std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
    if (format == "json") {
        json j;
        j["command"] = "sweep";
        j["r"] = r;
        json ps = json::array();
        for (const Prime& p : primes)
            ps.push_back(p.value());
        j["primes"] = ps;
        j["triples"] = rows.size();
        j["disagreements"] = disagreements;
        if (!out_path.empty())
            j["out"] = out_path;
        j["timing_ms"] = ms_since(start);
        summary << j.dump(2) << "\n";
    } else {
        summary << "sweep r=" << r << " triples=" << rows.size()
                << " disagreements=" << disagreements << " time=" << ms_since(start)
                << " ms\n";
    }
    return disagreements == 0 ? kExitOk : kExitDisagree;
}

int cmd_straighten(const std::string& tableau_str, const std::string& shape_str,
                   const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const Hook shape = Hook::parse(shape_str);
    const RawTableau raw = parse_tableau(tableau_str);
    int arm_degree = 0;
    for (auto& [letter, mult] : raw.arm)
        arm_degree += mult;
    if (arm_degree != shape.arm() ||
        static_cast<int>(raw.leg.size()) != shape.leg())
        throw std::invalid_argument("tableau does not have shape " +
                                    shape.to_string());

    const TableauCombo result = straighten(normalize_tableau(raw.arm, raw.leg, 1));
    if (format == "json") {
        json j;
        j["command"] = "straighten";
        j["tableau"] = tableau_str;
        j["shape"] = shape.to_string();
        j["result"] = to_json(result);
        j["timing_ms"] = ms_since(start);
        std::cout << j.dump(2) << "\n";
    } else {
        if (result.is_zero()) {
            std::cout << "0\n";
        } else {
            for (const auto& [t, c] : result.terms())
                std::cout << c.get_str() << " * " << t.to_string() << "\n";
        }
    }
    return kExitOk;
}

int cmd_ext(const std::string& hook_str, int d, const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const Hook h = Hook::parse(hook_str);
    const ExtGroup g = ext1_between_hooks(h, d);
    if (format == "json") {
        json j;
        j["command"] = "ext";
        j["hook"] = h.to_string();
        j["d"] = d;
        j["ext1"] = to_string(g);
        j["timing_ms"] = ms_since(start);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(g) << "\n";
    }
    return kExitOk;
}

int cmd_classical(const std::string& lambda_str, const std::string& hook_str,
                  long p_raw, const std::string& type_str, int rank,
                  const std::string& format) {
    const auto start = std::chrono::steady_clock::now();
    const Partition lam = Partition::parse(lambda_str);
    const Hook h = Hook::parse(hook_str);
    const Prime p(p_raw);
    ClassicalType type;
    if (type_str == "B")
        type = ClassicalType::B;
    else if (type_str == "C")
        type = ClassicalType::C;
    else if (type_str == "D")
        type = ClassicalType::D;
    else
        throw std::invalid_argument("type must be one of B, C, D");

    const Nonvanishing v = classical_nonvanishing(lam, h, p, type, rank);
    if (format == "json") {
        json j;
        j["command"] = "classical";
        j["lambda"] = lam.to_string();
        j["hook"] = h.to_string();
        j["p"] = p.value();
        j["type"] = type_str;
        j["n"] = rank;
        j["verdict"] = to_string(v);
        j["timing_ms"] = ms_since(start);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(v) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hom/Ext calculator for Weyl modules of the general "
                 "linear group when one weight is a hook"};
    app.require_subcommand(1);

    std::string lambda_str, hook_str, format = "text", primes_str = "2,3,5,7";
    std::string out_path, tableau_str, shape_str, type_str;
    long p_raw = 0;
    int r = 0, d = 0, rank = 0, cap = 9;
    bool with_oracle = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* hom = app.add_subcommand(
        "hom", "decide dim Hom(Delta(lambda), Delta(hook)) with a certificate");
    hom->add_option("--lambda", lambda_str, "source partition, e.g. 2,1,1,1")
        ->required();
    hom->add_option("--hook", hook_str, "target hook, e.g. 4,1 or 4,1^1")->required();
    hom->add_option("--p", p_raw, "prime characteristic")->required();
    hom->add_flag("--oracle", with_oracle,
                  "also run the brute-force nullspace and compare");
    add_format(hom);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "criterion vs oracle on every (lambda, hook, p) of degree r");
    sweep->add_option("--r", r, "degree to sweep")->required();
    sweep->add_option("--primes", primes_str, "comma-separated primes");
    sweep->add_option("--out", out_path, "write the CSV here instead of stdout");
    sweep->add_option("--cap", cap, "largest degree the sweep will accept");
    add_format(sweep);

    CLI::App* straighten_cmd =
        app.add_subcommand("straighten", "expand a hook tableau in the standard basis");
    straighten_cmd->add_option("--tableau", tableau_str, "e.g. \"2^(2) / 1\"")
        ->required();
    straighten_cmd->add_option("--shape", shape_str, "hook shape, e.g. 2,1")
        ->required();
    add_format(straighten_cmd);

    CLI::App* ext = app.add_subcommand(
        "ext", "integral Ext^1 from Delta(a,1^b) to Delta(a+d,1^(b-d))");
    ext->add_option("--hook", hook_str, "source hook")->required();
    ext->add_option("--d", d, "arm shift, at least 2")->required();
    add_format(ext);

    CLI::App* classical = app.add_subcommand(
        "classical", "sufficient nonvanishing for type B/C/D induced modules");
    classical->add_option("--lambda", lambda_str, "source partition")->required();
    classical->add_option("--hook", hook_str, "target hook")->required();
    classical->add_option("--p", p_raw, "prime characteristic")->required();
    classical->add_option("--type", type_str, "B, C or D")->required();
    classical->add_option("--n", rank, "rank of the group")->required();
    add_format(classical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage; // --help exits 0
    }

    try {
        if (hom->parsed())
            return cmd_hom(lambda_str, hook_str, p_raw, with_oracle, format);
        if (sweep->parsed())
            return cmd_sweep(r, primes_str, out_path, cap, format);
        if (straighten_cmd->parsed())
            return cmd_straighten(tableau_str, shape_str, format);
        if (ext->parsed())
            return cmd_ext(hook_str, d, format);
        if (classical->parsed())
            return cmd_classical(lambda_str, hook_str, p_raw, type_str, rank, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDisagree;
    }
    return kExitUsage;
}
