#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "jeedep/export.hpp"
#include "oracles.hpp"

using namespace jeedep;

namespace {

DependencyGraph sample_graph() {
    DependencyGraph graph;
    graph.add_artifact({"index.jsp", ArtifactKind::JspPage, "index.jsp", {"home"}});
    graph.add_artifact(
        {"com/app/Main.java", ArtifactKind::ServletClass, "com/app/Main.java", {"app"}});
    DependencyEdge resolved{"index.jsp",
                            TargetRef::resolved("com/app/Main.java"),
                            EdgeKind::HrefLink,
                            {"index.jsp", 1, 1},
                            {{"name", "Sami"}},
                            {{"method", "get"}}};
    DependencyEdge dangling{"index.jsp",
                            TargetRef::unresolved_url("/missing.jsp"),
                            EdgeKind::JspForwardAction,
                            {"index.jsp", 2, 1},
                            {},
                            {}};
    graph.add_edge(resolved);
    graph.add_edge(dangling);
    graph.add_diagnostic(make_warning("SOME_CODE", "note", SourceLocation{"index.jsp", 2, 1}));
    return graph;
}

}  // namespace

TEST_CASE("format names parse to formats") {
    CHECK(export_format_from_string("dot") == ExportFormat::Dot);
    CHECK(export_format_from_string("json") == ExportFormat::Json);
    CHECK(export_format_from_string("summary") == ExportFormat::Summary);
    CHECK_FALSE(export_format_from_string("xml").has_value());
}

TEST_CASE("an empty graph renders as empty top-level collections") {
    nlohmann::json doc = nlohmann::json::parse(render_json(DependencyGraph{}));
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 3);
    CHECK(doc["artifacts"] == nlohmann::json::array());
    CHECK(doc["edges"] == nlohmann::json::array());
    CHECK(doc["diagnostics"] == nlohmann::json::array());
}

TEST_CASE("the json document carries every field of the graph") {
    nlohmann::json doc = nlohmann::json::parse(render_json(sample_graph()));

    REQUIRE(doc["artifacts"].size() == 2);
    // Normalized order: ServletClass before JspPage.
    CHECK(doc["artifacts"][0]["id"] == "com/app/Main.java");
    CHECK(doc["artifacts"][0]["kind"] == "ServletClass");
    CHECK(doc["artifacts"][1]["logical_names"] == nlohmann::json::array({"home"}));

    REQUIRE(doc["edges"].size() == 2);
    const nlohmann::json& edge = doc["edges"][0];
    CHECK(edge["source"] == "index.jsp");
    CHECK(edge["kind"] == "HrefLink");
    CHECK(edge["target"]["variant"] == "ResolvedArtifact");
    CHECK(edge["target"]["value"] == "com/app/Main.java");
    CHECK(edge["location"]["file"] == "index.jsp");
    CHECK(edge["location"]["line"] == 1);
    CHECK(edge["params"][0] == nlohmann::json::array({"name", "Sami"}));
    CHECK(edge["attributes"][0] == nlohmann::json::array({"method", "get"}));

    REQUIRE(doc["diagnostics"].size() == 1);
    CHECK(doc["diagnostics"][0]["severity"] == "Warning");
    CHECK(doc["diagnostics"][0]["code"] == "SOME_CODE");
    CHECK(doc["diagnostics"][0]["location"]["line"] == 2);
}

TEST_CASE("a diagnostic without a location omits the location key") {
    DependencyGraph graph;
    graph.add_diagnostic(make_error("X", "no location"));
    nlohmann::json doc = nlohmann::json::parse(render_json(graph));
    REQUIRE(doc["diagnostics"].size() == 1);
    CHECK_FALSE(doc["diagnostics"][0].contains("location"));
}

TEST_CASE("parsing rendered json recovers the normalized graph") {
    JsonParseOutcome outcome = parse_json_graph(render_json(sample_graph()));
    REQUIRE(outcome.error.empty());
    REQUIRE(outcome.graph.has_value());
    CHECK(*outcome.graph == sample_graph().normalized());
}

TEST_CASE("round-trip holds for randomized graphs") {
    std::mt19937 rng(77'000'001);
    for (int round = 0; round < 300; ++round) {
        DependencyGraph graph = oracle::random_graph(rng);
        std::string text = render_json(graph);
        JsonParseOutcome outcome = parse_json_graph(text);
        REQUIRE(outcome.error.empty());
        REQUIRE(outcome.graph.has_value());
        bool equal = *outcome.graph == graph;
        CHECK(equal);
        if (!equal) break;  // one detailed failure is enough
        // Rendering is a pure function of the normalized graph.
        CHECK(render_json(*outcome.graph) == text);
    }
}

TEST_CASE("unparsable or shapeless input reports an error, never throws") {
    CHECK_FALSE(parse_json_graph("not json at all").error.empty());
    CHECK_FALSE(parse_json_graph("[]").error.empty());
    CHECK_FALSE(parse_json_graph("{\"artifacts\": []}").error.empty());
    CHECK_FALSE(parse_json_graph("{\"artifacts\": [{\"kind\": \"NoSuchKind\"}], "
                                 "\"edges\": [], \"diagnostics\": []}")
                    .error.empty());
}

TEST_CASE("dot output declares every artifact and styles unresolved targets") {
    std::string dot = render_dot(sample_graph());
    CHECK(dot.starts_with("digraph dependencies {"));
    CHECK(dot.find("\"index.jsp\"") != std::string::npos);
    CHECK(dot.find("\"com/app/Main.java\"") != std::string::npos);
    CHECK(dot.find("box") != std::string::npos);       // servlet shape
    CHECK(dot.find("HrefLink") != std::string::npos);  // edge label
    // The dangling forward goes to a synthetic dashed node.
    CHECK(dot.find("unresolved:/missing.jsp") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(dot.back() == '\n');
}

TEST_CASE("summary counts artifacts, edges, and diagnostics by kind") {
    std::string summary = render_summary(sample_graph());
    CHECK(summary.find("artifacts: 2") != std::string::npos);
    CHECK(summary.find("JspPage: 1") != std::string::npos);
    CHECK(summary.find("ServletClass: 1") != std::string::npos);
    CHECK(summary.find("edges: 2") != std::string::npos);
    CHECK(summary.find("HrefLink: 1") != std::string::npos);
    CHECK(summary.find("JspForwardAction: 1") != std::string::npos);
    CHECK(summary.find("diagnostics: 1") != std::string::npos);
    CHECK(summary.find("Warning: 1") != std::string::npos);
}
