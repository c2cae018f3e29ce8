#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "jeedep/page_scan.hpp"
#include "jeedep/url_resolve.hpp"

namespace {

/// A synthetic JSP page with a spread of mechanisms, sized by repetition.
std::string synthetic_page(int blocks) {
    std::ostringstream out;
    out << "<%@ taglib uri=\"http://java.sun.com/jsp/jstl/core\" prefix=\"c\" %>\n";
    for (int i = 0; i < blocks; ++i) {
        out << "<html><body>\n";
        out << "<form action=\"/servlet" << i << "\" method=\"post\">\n";
        out << "  <input name=\"q\" value=\"${bean" << i << ".firstName}\"/>\n";
        out << "</form>\n";
        out << "<jsp:include page=\"/fragment" << i << ".jsp\"><jsp:param name=\"n\" value=\""
            << i << "\"/></jsp:include>\n";
        out << "<c:url value=\"/page" << i << ".jsp\" var=\"u\"/>\n";
        out << "<a href=\"page" << i << ".html\">go</a>\n";
        out << "<% request.getRequestDispatcher(\"/target" << i
            << ".jsp\").forward(request, response); %>\n";
        out << "</body></html>\n";
    }
    return out.str();
}

void page_scan_throughput(benchmark::State& state) {
    std::string content = synthetic_page(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        jeedep::PageScanResult result =
            jeedep::scan_page(content, "bench.jsp", jeedep::ArtifactKind::JspPage);
        benchmark::DoNotOptimize(result);
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(content.size()));
}
BENCHMARK(page_scan_throughput)->Arg(1)->Arg(16)->Arg(256);

jeedep::UrlMappingTable synthetic_table(int entries) {
    jeedep::UrlMappingTable table;
    std::mt19937 rng(7);
    for (int i = 0; i < entries; ++i) {
        std::string name = "servlet" + std::to_string(i);
        std::string pattern;
        switch (i % 4) {
            case 0: pattern = "/exact" + std::to_string(i); break;
            case 1: pattern = "/prefix" + std::to_string(i) + "/*"; break;
            case 2: pattern = "*.ext" + std::to_string(i); break;
            default: pattern = "/deep/prefix" + std::to_string(i) + "/more/*"; break;
        }
        table.entries.push_back({jeedep::classify_pattern(pattern), name,
                                 jeedep::MappingEntry::Origin::Descriptor,
                                 jeedep::SourceLocation{"web.xml", i + 1, 1}});
        table.declarations.emplace(name,
                                   jeedep::ServletTarget::java_class("com.app.Servlet" + std::to_string(i)));
    }
    return table;
}

void url_resolve_throughput(benchmark::State& state) {
    jeedep::UrlMappingTable table = synthetic_table(static_cast<int>(state.range(0)));
    std::vector<std::string> urls;
    std::mt19937 rng(11);
    for (int i = 0; i < 512; ++i) {
        switch (rng() % 4) {
            case 0: urls.push_back("/exact" + std::to_string(rng() % 64)); break;
            case 1: urls.push_back("/prefix" + std::to_string(rng() % 64) + "/x/y"); break;
            case 2: urls.push_back("/file" + std::to_string(rng() % 64) + ".ext3"); break;
            default: urls.push_back("/miss/" + std::to_string(rng() % 64)); break;
        }
    }
    size_t i = 0;
    for (auto _ : state) {
        auto handler = jeedep::resolve(urls[i % urls.size()], table);
        benchmark::DoNotOptimize(handler);
        ++i;
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(url_resolve_throughput)->Arg(8)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
