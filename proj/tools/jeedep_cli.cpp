#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jeedep/export.hpp"
#include "jeedep/graph_build.hpp"
#include "jeedep/model.hpp"

namespace {

void print_diagnostic(const jeedep::Diagnostic& diagnostic) {
    std::ostream& err = std::cerr;
    if (diagnostic.location)
        err << diagnostic.location->file_path << ":" << diagnostic.location->line << ":"
            << diagnostic.location->column << ": ";
    err << jeedep::to_string(diagnostic.severity) << ": " << diagnostic.code << ": "
        << diagnostic.message << "\n";
}

bool has_strict_findings(const jeedep::DependencyGraph& graph) {
    for (const jeedep::DependencyEdge& edge : graph.edges())
        if (edge.target.variant == jeedep::TargetRef::Variant::UnresolvedUrl ||
            edge.target.variant == jeedep::TargetRef::Variant::BeanRef)
            return true;
    for (const jeedep::Diagnostic& diagnostic : graph.diagnostics())
        if (diagnostic.severity == jeedep::Severity::Error) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Scans a JEE web application source tree, detects web-tier communication\n"
        "mechanisms (servlets, JSP, JSF, JavaBeans, managed beans), resolves URL\n"
        "references through the deployment descriptor and annotations, and emits a\n"
        "typed dependency graph."};

    std::string root;
    std::string format = "json";
    std::string output;
    std::string context_path;
    bool case_insensitive_extensions = false;
    bool include_unresolved = true;
    bool strict = false;
    bool quiet = false;

    app.add_option("ROOT", root, "web application source root to analyze")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"dot", "json", "summary"}))
        ->capture_default_str();
    app.add_option("--output", output, "write the result to this file instead of standard output");
    auto* context_opt =
        app.add_option("--context-path", context_path,
                       "context-path prefix stripped from root-relative URLs (e.g. /myapp)");
    app.add_flag("--case-insensitive-extensions", case_insensitive_extensions,
                 "match *.ext url-patterns case-insensitively");
    app.add_flag("--include-unresolved,!--no-include-unresolved", include_unresolved,
                 "keep edges whose target matches no discovered artifact (default on)");
    app.add_flag("--strict", strict,
                 "exit 1 when unresolved references or error diagnostics exist");
    app.add_flag("--quiet", quiet, "do not print diagnostics to the error stream");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0, every usage problem exits 2
    }

    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec) || ec) {
        std::cerr << "error: cannot read root directory '" << root << "'\n";
        return 3;
    }

    jeedep::AnalysisConfig config;
    config.root = root;
    if (*context_opt) config.context_path = context_path;
    config.case_insensitive_extensions = case_insensitive_extensions;
    config.include_unresolved = include_unresolved;

    jeedep::DependencyGraph graph = jeedep::analyze_project(config);

    if (!quiet)
        for (const jeedep::Diagnostic& diagnostic : graph.diagnostics())
            print_diagnostic(diagnostic);

    std::string rendered;
    switch (*jeedep::export_format_from_string(format)) {
        case jeedep::ExportFormat::Dot: rendered = jeedep::render_dot(graph); break;
        case jeedep::ExportFormat::Json: rendered = jeedep::render_json(graph); break;
        case jeedep::ExportFormat::Summary: rendered = jeedep::render_summary(graph); break;
    }

    if (output.empty()) {
        std::cout << rendered;
        if (!std::cout) {
            std::cerr << "error: cannot write to standard output\n";
            return 3;
        }
    } else {
        std::ofstream out(output, std::ios::binary);
        out << rendered;
        out.flush();
        if (!out) {
            std::cerr << "error: cannot write output file '" << output << "'\n";
            return 3;
        }
    }

    return strict && has_strict_findings(graph) ? 1 : 0;
}
