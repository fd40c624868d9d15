#include "cli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracspace/approximation.hpp"
#include "fracspace/enumerations.hpp"
#include "fracspace/fraction.hpp"
#include "fracspace/genealogy.hpp"
#include "fracspace/trees.hpp"

namespace fracspace::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { plain, csv, jsonl };

constexpr std::uint32_t max_rows_unforced = 64;
constexpr std::uint64_t max_count_unforced = std::uint64_t{1} << 24;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, Format> format_names = {
    {"plain", Format::plain}, {"csv", Format::csv}, {"jsonl", Format::jsonl}};

const std::map<std::string, TreeKind> kind_names = {
    {"sb", TreeKind::stern_brocot},
    {"cw", TreeKind::calkin_wilf},
    {"sa", TreeKind::shen_andreev},
    {"kepler", TreeKind::kepler},
    {"sb-reduced", TreeKind::stern_brocot_reduced},
    {"cw-reduced", TreeKind::calkin_wilf_reduced},
};

Integer parse_positive_integer(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
    Integer v(text);
    if (v < 1)
        throw UsageError(std::string(what) + " must be at least 1");
    return v;
}

Fraction parse_positive_fraction(const std::string& text) {
    Fraction f;
    try {
        f = parse_fraction(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!f.is_finite_positive())
        throw UsageError("expected a positive finite fraction, got " + to_string(f));
    return f;
}

// Fraction sequences in one of the three output formats.
class SequenceWriter {
public:
    SequenceWriter(std::ostream& out, Format format) : out_(out), format_(format) {
        if (format_ == Format::csv)
            out_ << "index,num,den\n";
    }

    void write(std::uint64_t index, const Fraction& f) {
        switch (format_) {
        case Format::plain: out_ << f << '\n'; break;
        case Format::csv: out_ << index << ',' << f.num() << ',' << f.den() << '\n'; break;
        case Format::jsonl:
            out_ << Json{{"index", index}, {"num", f.num().str()}, {"den", f.den().str()}}.dump() << '\n';
            break;
        }
    }

private:
    std::ostream& out_;
    Format format_;
};

// Key/value records (locate, approx).
void write_record(std::ostream& out, Format format,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
    switch (format) {
    case Format::plain:
        for (const auto& [k, v] : fields)
            out << k << ": " << v << '\n';
        break;
    case Format::csv:
        out << "key,value\n";
        for (const auto& [k, v] : fields)
            out << k << ',' << (v.find(',') == std::string::npos ? v : '"' + v + '"') << '\n';
        break;
    case Format::jsonl: {
        Json obj = Json::object();
        for (const auto& [k, v] : fields)
            obj[k] = v;
        out << obj.dump() << '\n';
        break;
    }
    }
}

void cmd_tree(TreeKind kind, std::uint32_t rows, Format format, bool force, std::ostream& out) {
    if (rows < 1)
        throw UsageError("--rows must be at least 1");
    if (rows > max_rows_unforced && !force)
        throw UsageError("refusing to emit more than " + std::to_string(max_rows_unforced) +
                         " rows without --force");
    if (format == Format::csv)
        out << "row,index,num,den\n";
    RowGenerator gen(kind);
    for (std::uint32_t r = 0; r < rows; ++r) {
        if (r)
            gen.advance();
        const auto& current = gen.current();
        for (std::size_t i = 0; i < current.size(); ++i) {
            const Fraction& f = current[i];
            switch (format) {
            case Format::plain: out << (i ? " " : "") << f; break;
            case Format::csv: out << r << ',' << i << ',' << f.num() << ',' << f.den() << '\n'; break;
            case Format::jsonl:
                out << Json{{"row", r}, {"index", i}, {"num", f.num().str()}, {"den", f.den().str()}}.dump()
                    << '\n';
                break;
            }
        }
        if (format == Format::plain)
            out << '\n';
    }
}

void cmd_enumerate(const std::string& method, std::uint64_t count, Format format, bool force,
                   std::ostream& out) {
    if (count < 1)
        throw UsageError("--count must be at least 1");
    if (count > max_count_unforced && !force)
        throw UsageError("refusing to emit more than " + std::to_string(max_count_unforced) +
                         " fractions without --force");

    std::optional<TreeKind> bfs_kind;
    if (method.rfind("bfs:", 0) == 0) {
        auto it = kind_names.find(method.substr(4));
        if (it == kind_names.end())
            throw UsageError("unknown tree kind in method '" + method + "'");
        bfs_kind = it->second;
    } else if (method != "stern" && method != "newman") {
        throw UsageError("unknown method '" + method + "'");
    }

    SequenceWriter writer(out, format);
    if (method == "stern") {
        SternRatios it;
        for (std::uint64_t i = 1; i <= count; ++i, it.advance())
            writer.write(i, it.current());
    } else if (method == "newman") {
        NewmanIterator it;
        for (std::uint64_t i = 1; i <= count; ++i, it.advance())
            writer.write(i, it.current());
    } else {
        RowGenerator gen(*bfs_kind);
        std::uint64_t i = 1;
        for (;;) {
            for (const Fraction& f : gen.current()) {
                writer.write(i, f);
                if (i++ == count)
                    return;
            }
            gen.advance();
        }
    }
}

void cmd_locate(const std::string& text, Format format, std::ostream& out) {
    Fraction f = parse_positive_fraction(text);
    ParentPair pp = parents(f);
    write_record(out, format,
                 {
                     {"fraction", to_string(f)},
                     {"path", to_string(path_to(f))},
                     {"left-parent", to_string(pp.left)},
                     {"right-parent", to_string(pp.right)},
                     {"handedness", std::string(to_string(handedness(f)))},
                     {"sb-index", index_of(f, TreeKind::stern_brocot).str()},
                     {"cw-index", index_of(f, TreeKind::calkin_wilf).str()},
                     {"sa-index", index_of(f, TreeKind::shen_andreev).str()},
                 });
}

void cmd_approx(const std::string& text, const std::string& max_den_text, const std::string& mode,
                Format format, std::ostream& out) {
    Fraction target = parse_positive_fraction(text);
    Integer max_den = parse_positive_integer(max_den_text, "--max-den");
    ErrorMeasure measure;
    if (mode == "absolute")
        measure = ErrorMeasure::absolute;
    else if (mode == "normalized")
        measure = ErrorMeasure::normalized;
    else
        throw UsageError("unknown mode '" + mode + "'");
    ApproximationResult r = best_bounded(target, max_den, measure);
    write_record(out, format,
                 {
                     {"target", to_string(target)},
                     {"max-den", max_den.str()},
                     {"below", to_string(r.below)},
                     {"above", to_string(r.above)},
                     {"best", to_string(r.best)},
                     {"certificate", to_string(r.interval_certificate)},
                 });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Positive fractions: trees, enumerations, parents and bounded approximation",
                 "fracspace"};
    app.require_subcommand(1);

    Format format = Format::plain;
    bool force = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    };

    auto* tree = app.add_subcommand("tree", "Emit the first rows of a tree");
    std::string kind_name;
    std::uint32_t rows = 0;
    tree->add_option("--kind", kind_name, "sb|cw|sa|kepler|sb-reduced|cw-reduced")->required();
    tree->add_option("--rows", rows, "Number of rows")->required();
    tree->add_flag("--force", force, "Allow more than 64 rows");
    add_common(tree);

    auto* enumerate = app.add_subcommand("enumerate", "Emit the first terms of an enumeration");
    std::string method;
    std::uint64_t count = 0;
    enumerate->add_option("--method", method, "stern|newman|bfs:<kind>")->required();
    enumerate->add_option("--count", count, "Number of fractions")->required();
    enumerate->add_flag("--force", force, "Allow more than 2^24 fractions");
    add_common(enumerate);

    auto* locate = app.add_subcommand("locate", "Path, parents and tree indices of a fraction");
    std::string locate_target;
    locate->add_option("fraction", locate_target, "num/den")->required();
    add_common(locate);

    auto* approx = app.add_subcommand("approx", "Best approximation with bounded denominator");
    std::string approx_target;
    std::string max_den;
    std::string mode = "absolute";
    approx->add_option("target", approx_target, "num/den")->required();
    approx->add_option("--max-den", max_den, "Largest admissible denominator")->required();
    approx->add_option("--mode", mode, "absolute|normalized");
    add_common(approx);

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("fracspace");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every other parse failure is a usage error.
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (tree->parsed()) {
            auto it = kind_names.find(kind_name);
            if (it == kind_names.end())
                throw UsageError("unknown tree kind '" + kind_name + "'");
            cmd_tree(it->second, rows, format, force, out);
        } else if (enumerate->parsed()) {
            cmd_enumerate(method, count, format, force, out);
        } else if (locate->parsed()) {
            cmd_locate(locate_target, format, out);
        } else if (approx->parsed()) {
            cmd_approx(approx_target, max_den, mode, format, out);
        }
    } catch (const UsageError& e) {
        err << "fracspace: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "fracspace: " << e.what() << '\n';
        return exit_usage;
    }
    out.flush();
    return exit_ok;
}

}  // namespace fracspace::cli
