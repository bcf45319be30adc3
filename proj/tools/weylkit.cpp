// Command-line front end: evaluate module expressions, expand characters in
// the standard or twisted bases, and run the named verification checks.
#include <CLI11.hpp>

#include "weylkit/checks.hpp"

#include <cstdint>
#include <optional>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitDataError = 2;
constexpr int kExitUsageError = 3;

weylkit::Dataset load(const std::string& data_path) {
    if (data_path.empty()) return weylkit::load_builtin_dataset();
    return weylkit::load_dataset_file(data_path);
}

int report_data_error(const weylkit::Error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitDataError;
}

// Syntax errors carry a byte offset into the expression; everything else in a
// user expression is a data problem (unknown table row, bad twist, ...).
int report_expression_error(const weylkit::Error& e) {
    if (e.kind() == weylkit::ErrorKind::SyntaxError) {
        std::cerr << e.what();
        if (e.offset() >= 0) std::cerr << " (byte " << e.offset() << ")";
        std::cerr << "\n";
        return kExitUsageError;
    }
    return report_data_error(e);
}

int write_output(const std::string& out_path, const std::string& body) {
    if (out_path.empty()) {
        std::cout << body;
        return kExitPass;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "io error: cannot open " << out_path << " for writing\n";
        return kExitDataError;
    }
    file << body;
    file.flush();
    if (!file) {
        std::cerr << "io error: failed while writing " << out_path << "\n";
        return kExitDataError;
    }
    return kExitPass;
}

const char* verdict_name(weylkit::FiltrationVerdict::Status s) {
    using S = weylkit::FiltrationVerdict::Status;
    switch (s) {
        case S::Decomposed: return "decomposed";
        case S::CharacterObstruction: return "character obstruction";
        case S::HeadObstruction: return "head obstruction";
        case S::Inconclusive: return "inconclusive";
    }
    return "?";
}

void print_verdict(const char* basis, const weylkit::FiltrationVerdict& v) {
    std::cout << "decomposition (" << basis << " basis): " << verdict_name(v.status) << "\n";
    for (const auto& [w, m] : v.witness)
        std::cout << "  " << w.to_string() << " x " << m.str() << "\n";
    if (v.obstruction_weight.has_value())
        std::cout << "  obstruction: coefficient " << v.obstruction_coefficient.str() << " at "
                  << v.obstruction_weight->to_string() << "\n";
}

int check_p(const weylkit::Dataset& d, std::int64_t p) {
    if (p != 0 && p != d.p) {
        std::cerr << "data error: the dataset has p = " << d.p << ", not p = " << p << "\n";
        return kExitDataError;
    }
    return kExitPass;
}

int run_verify(const std::string& check_id, const std::string& data_path,
               const std::string& format, const std::string& out_path) {
    std::optional<weylkit::Dataset> d;
    try {
        d.emplace(load(data_path));
    } catch (const weylkit::Error& e) {
        return report_data_error(e);
    }

    std::vector<weylkit::CheckReport> reports;
    try {
        if (check_id.empty()) {
            reports = weylkit::run_all_checks(*d);
        } else {
            reports.push_back(weylkit::run_check(check_id, *d));
        }
    } catch (const weylkit::Error& e) {
        if (e.kind() == weylkit::ErrorKind::UnsupportedType) {
            std::cerr << "usage error: " << e.what() << "\n";
            std::cerr << "known checks:";
            for (const auto& id : weylkit::check_catalog()) std::cerr << " " << id;
            std::cerr << "\n";
            return kExitUsageError;
        }
        return report_data_error(e);
    }

    const std::string body = format == "json"
                                 ? weylkit::render_json_report(reports).dump(2) + "\n"
                                 : weylkit::render_text_report(*d, reports);
    const int io = write_output(out_path, body);
    if (io != kExitPass) return io;

    bool any_fail = false;
    bool any_missing = false;
    for (const auto& r : reports) {
        if (r.status == weylkit::CheckReport::Status::Fail) any_fail = true;
        if (r.status == weylkit::CheckReport::Status::DataMissing) any_missing = true;
    }
    if (any_fail) return kExitCheckFailure;
    if (any_missing) return kExitDataError;
    return kExitPass;
}

int run_char(const std::string& expr_text, const std::string& data_path, std::int64_t p,
             const std::string& decompose) {
    std::optional<weylkit::Dataset> d;
    try {
        d.emplace(load(data_path));
    } catch (const weylkit::Error& e) {
        return report_data_error(e);
    }
    if (const int rc = check_p(*d, p); rc != kExitPass) return rc;

    try {
        const auto c = weylkit::evaluate_character(*d, expr_text);
        std::cout << "dimension: " << c.dimension().str() << "\n";
        std::cout << "dominant weights:\n";
        for (const auto& [w, m] : c.terms())
            if (d->rs->is_dominant(w)) std::cout << "  " << w.to_string() << " x " << m.str() << "\n";
        if (decompose == "weyl") {
            print_verdict("weyl", weylkit::good_filtration_decompose(c));
        } else if (decompose == "pr") {
            print_verdict("pr", weylkit::good_pr_filtration_decompose(c, d->p, 1, d->decomposition));
        }
        return kExitPass;
    } catch (const weylkit::Error& e) {
        return report_expression_error(e);
    }
}

int run_dim(const std::string& expr_text, const std::string& data_path, std::int64_t p) {
    std::optional<weylkit::Dataset> d;
    try {
        d.emplace(load(data_path));
    } catch (const weylkit::Error& e) {
        return report_data_error(e);
    }
    if (const int rc = check_p(*d, p); rc != kExitPass) return rc;

    try {
        std::cout << weylkit::evaluate_character(*d, expr_text).dimension().str() << "\n";
        return kExitPass;
    } catch (const weylkit::Error& e) {
        return report_expression_error(e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character arithmetic for semisimple groups in prime characteristic"};
    app.require_subcommand(1);

    std::string check_id;
    bool all_flag = false;
    std::string verify_data;
    std::string format = "text";
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "run named verification checks");
    auto* id_opt = verify->add_option("check_id", check_id, "a single check to run (default: all)");
    verify->add_flag("--all", all_flag, "run the full catalog (the default)")->excludes(id_opt);
    verify->add_option("--data", verify_data, "dataset file (default: built-in)");
    verify->add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to this file instead of stdout");

    std::string char_expr;
    std::string char_data;
    std::int64_t char_p = 0;
    std::string decompose;
    auto* chr = app.add_subcommand("char", "evaluate a module expression to its character");
    chr->add_option("expr", char_expr, "module expression, e.g. \"St * L(1,0)^[1]\"")->required();
    chr->add_option("--data", char_data, "dataset file (default: built-in)");
    chr->add_option("--p", char_p, "expected characteristic; must match the dataset");
    chr->add_option("--decompose", decompose, "also expand in the weyl or pr basis")
        ->check(CLI::IsMember({"weyl", "pr"}));

    std::string dim_expr;
    std::string dim_data;
    std::int64_t dim_p = 0;
    auto* dim = app.add_subcommand("dim", "evaluate a module expression to its dimension");
    dim->add_option("expr", dim_expr, "module expression")->required();
    dim->add_option("--data", dim_data, "dataset file (default: built-in)");
    dim->add_option("--p", dim_p, "expected characteristic; must match the dataset");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsageError;
    }

    if (verify->parsed()) return run_verify(check_id, verify_data, format, out_path);
    if (chr->parsed()) return run_char(char_expr, char_data, char_p, decompose);
    return run_dim(dim_expr, dim_data, dim_p);
}
