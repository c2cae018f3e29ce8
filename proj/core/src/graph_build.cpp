#include "jeedep/graph_build.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "jeedep/el_parse.hpp"

namespace jeedep {

namespace fs = std::filesystem;

namespace {

std::string to_lower_copy(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

const std::vector<std::pair<std::string, ArtifactKind>>& default_extension_map() {
    static const std::vector<std::pair<std::string, ArtifactKind>> kMap = {
        {".jsp", ArtifactKind::JspPage},   {".jspx", ArtifactKind::JspPage},
        {".xhtml", ArtifactKind::JsfPage}, {".html", ArtifactKind::HtmlPage},
        {".htm", ArtifactKind::HtmlPage},  {".java", ArtifactKind::OtherJavaType},
    };
    return kMap;
}

std::optional<ArtifactKind> classify_file(const fs::path& relative, const AnalysisConfig& config) {
    std::string filename = to_lower_copy(relative.filename().string());
    if (filename == "web.xml") return ArtifactKind::DeploymentDescriptor;
    if (filename == "faces-config.xml") return ArtifactKind::FacesConfig;
    std::string ext = to_lower_copy(relative.extension().string());
    if (ext.empty()) return std::nullopt;
    for (const auto& [candidate, kind] : config.file_extension_map)
        if (to_lower_copy(candidate) == ext) return kind;
    for (const auto& [candidate, kind] : default_extension_map())
        if (candidate == ext) return kind;
    return std::nullopt;
}

std::optional<std::string> read_file(const fs::path& absolute) {
    std::ifstream in(absolute, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return std::move(buffer).str();
}

/// Directory of a project-relative page path as a root-absolute URL path:
/// "a/b.jsp" -> "/a", "b.jsp" -> "/".
std::string page_directory(const std::string& page_path) {
    size_t slash = page_path.rfind('/');
    if (slash == std::string::npos) return "/";
    return "/" + page_path.substr(0, slash);
}

bool is_page_kind(ArtifactKind kind) {
    return kind == ArtifactKind::JspPage || kind == ArtifactKind::JsfPage ||
           kind == ArtifactKind::HtmlPage;
}

bool is_java_kind(ArtifactKind kind) {
    return kind == ArtifactKind::ServletClass || kind == ArtifactKind::BeanClass ||
           kind == ArtifactKind::OtherJavaType;
}

bool embeds_el(std::string_view text) {
    return text.find("${") != std::string_view::npos ||
           text.find("#{") != std::string_view::npos;
}

const std::string* attribute_value(const std::vector<std::pair<std::string, std::string>>& attrs,
                                   std::string_view key) {
    for (const auto& [k, v] : attrs)
        if (k == key) return &v;
    return nullptr;
}

std::string scenario_name(DispatcherCall::Scenario scenario) {
    return scenario == DispatcherCall::Scenario::Chained ? "chained" : "two-statement";
}

/// Result of scanning one discovered file; exactly one member is populated
/// unless the read failed (diagnostics only, no artifact).
struct PerFileScan {
    std::optional<WebXmlResult> web_xml;
    std::optional<FacesConfigResult> faces;
    std::optional<JavaScanOutput> java;
    std::optional<PageScanResult> page;
    std::vector<Diagnostic> diagnostics;
    bool readable = false;
};

PerFileScan scan_one(const fs::path& root, const DiscoveredFile& file) {
    PerFileScan out;
    std::optional<std::string> content = read_file(root / fs::path(file.path));
    if (!content) {
        out.diagnostics.push_back(make_warning(diag::kIoError, "cannot read '" + file.path + "'",
                                               SourceLocation{file.path, 1, 1}));
        return out;
    }
    out.readable = true;
    switch (file.kind) {
        case ArtifactKind::DeploymentDescriptor:
            out.web_xml = parse_web_xml(*content, file.path);
            break;
        case ArtifactKind::FacesConfig:
            out.faces = parse_faces_config(*content, file.path);
            break;
        case ArtifactKind::ServletClass:
        case ArtifactKind::BeanClass:
        case ArtifactKind::OtherJavaType:
            out.java = scan_java_source(*content, file.path);
            break;
        case ArtifactKind::JspPage:
        case ArtifactKind::JsfPage:
        case ArtifactKind::HtmlPage:
            out.page = scan_page(*content, file.path, file.kind);
            break;
    }
    return out;
}

/// Scans every file, optionally across threads. Each result lands in the slot
/// of its file, so the output is independent of scheduling.
std::vector<PerFileScan> scan_all(const fs::path& root, const std::vector<DiscoveredFile>& files,
                                  int scan_threads) {
    std::vector<PerFileScan> slots(files.size());
    std::size_t want = scan_threads > 0 ? static_cast<std::size_t>(scan_threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    std::size_t workers = std::min(want, files.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) slots[i] = scan_one(root, files[i]);
        return slots;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1))
            slots[i] = scan_one(root, files[i]);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
    return slots;
}

}  // namespace

DiscoverResult discover(const AnalysisConfig& config) {
    DiscoverResult out;
    fs::path root(config.root);
    std::error_code ec;
    fs::directory_options options = fs::directory_options::skip_permission_denied;
    if (config.follow_symlinks) options |= fs::directory_options::follow_directory_symlink;
    fs::recursive_directory_iterator it(root, options, ec);
    if (ec) {
        out.diagnostics.push_back(make_warning(
            diag::kIoError, "cannot open analysis root '" + config.root + "': " + ec.message()));
        return out;
    }
    for (fs::recursive_directory_iterator end; it != end;) {
        std::error_code entry_ec;
        bool regular = config.follow_symlinks
                           ? it->is_regular_file(entry_ec)
                           : fs::is_regular_file(it->symlink_status(entry_ec));
        if (!entry_ec && regular) {
            fs::path relative = fs::relative(it->path(), root, entry_ec);
            if (!entry_ec) {
                if (std::optional<ArtifactKind> kind = classify_file(relative, config))
                    out.files.push_back({relative.generic_string(), *kind});
            }
        }
        if (entry_ec)
            out.diagnostics.push_back(make_warning(
                diag::kIoError, "cannot stat '" + it->path().generic_string() + "': " + entry_ec.message()));
        it.increment(ec);
        if (ec) {
            out.diagnostics.push_back(
                make_warning(diag::kIoError, "directory walk stopped: " + ec.message()));
            break;
        }
    }
    std::sort(out.files.begin(), out.files.end(),
              [](const DiscoveredFile& a, const DiscoveredFile& b) { return a.path < b.path; });
    return out;
}

UrlMappingTable build_mapping_table(const std::vector<DescriptorScanInfo>& descriptors,
                                    const std::vector<JavaScanInfo>& java_results,
                                    std::vector<Diagnostic>& diagnostics) {
    UrlMappingTable table;
    // Declarations: descriptors take precedence over annotations, and within
    // each source the first declaration of a name wins.
    for (const auto& d : descriptors)
        for (const ServletDeclaration& decl : d.web_xml.declarations)
            table.declarations.emplace(decl.servlet_name, decl.target);
    for (const auto& j : java_results) {
        if (j.result.type_name.empty() || j.result.web_servlet_patterns.empty()) continue;
        table.declarations.emplace(j.result.type_name,
                                   ServletTarget::java_class(j.result.type_name));
    }

    auto classify_into = [&](const std::string& raw, const std::string& servlet_name,
                             MappingEntry::Origin origin, const SourceLocation& location) {
        UrlPattern pattern = classify_pattern(raw);
        if (pattern.noncanonical)
            diagnostics.push_back(make_warning(
                diag::kNoncanonicalPattern,
                "url-pattern '" + raw + "' is not a standard pattern shape", location));
        table.entries.push_back({std::move(pattern), servlet_name, origin, location});
    };

    for (const auto& d : descriptors)
        for (const ServletMapping& mapping : d.web_xml.mappings) {
            // Mappings naming an undeclared servlet were already flagged by
            // the descriptor scan; their entries are dropped here.
            if (!table.declarations.contains(mapping.servlet_name)) continue;
            for (const std::string& raw : mapping.url_patterns)
                classify_into(raw, mapping.servlet_name, MappingEntry::Origin::Descriptor,
                              mapping.location);
        }
    for (const auto& j : java_results)
        for (const WebServletPattern& wp : j.result.web_servlet_patterns)
            classify_into(wp.pattern, j.result.type_name, MappingEntry::Origin::Annotation,
                          wp.location);
    return table;
}

void BeanRegistry::register_global(const std::string& name, Entry entry,
                                   std::vector<Diagnostic>& diagnostics) {
    auto [it, inserted] = global_.try_emplace(name, entry);
    if (inserted) return;
    bool config_beats_annotation = entry.source == RegistrationSource::Kind::ConfigFile &&
                                   it->second.source == RegistrationSource::Kind::Annotation;
    diagnostics.push_back(make_warning(
        diag::kDupBeanName,
        "bean name '" + name + "' registered more than once ('" + it->second.bean_class +
            "' and '" + entry.bean_class + "'); " +
            (config_beats_annotation ? "the configuration-file entry wins"
                                     : "the earlier registration wins"),
        entry.location));
    if (config_beats_annotation) it->second = std::move(entry);
}

void BeanRegistry::register_page_scoped(const std::string& page, const std::string& id,
                                        const std::string& bean_class) {
    page_scoped_.try_emplace({page, id}, bean_class);
}

std::optional<BeanRegistry::Lookup> BeanRegistry::lookup(const std::string& page,
                                                         const std::string& name) const {
    if (auto it = page_scoped_.find({page, name}); it != page_scoped_.end())
        return Lookup{it->second, true};
    if (auto it = global_.find(name); it != global_.end())
        return Lookup{it->second.bean_class, false};
    return std::nullopt;
}

BeanRegistry build_bean_registry(const std::vector<FacesConfigInfo>& faces_configs,
                                 const std::vector<JavaScanInfo>& java_results,
                                 const std::vector<PageScanInfo>& page_results,
                                 std::vector<Diagnostic>& diagnostics) {
    BeanRegistry registry;
    for (const auto& f : faces_configs)
        for (const ManagedBeanRegistration& reg : f.faces.registrations)
            registry.register_global(
                reg.bean_name,
                {reg.bean_class, RegistrationSource::Kind::ConfigFile, reg.source.location},
                diagnostics);
    for (const auto& j : java_results) {
        if (!j.result.managed_bean || j.result.type_name.empty()) continue;
        registry.register_global(j.result.managed_bean->name,
                                 {j.result.type_name, RegistrationSource::Kind::Annotation,
                                  j.result.managed_bean->location},
                                 diagnostics);
    }
    for (const auto& p : page_results)
        for (const UseBeanDecl& ub : p.result.use_beans)
            registry.register_page_scoped(p.path, ub.id, ub.class_name);
    return registry;
}

DependencyGraph analyze_project(const AnalysisConfig& config) {
    DependencyGraph graph;
    DiscoverResult discovered = discover(config);
    graph.add_diagnostics(std::move(discovered.diagnostics));

    std::vector<PerFileScan> scans =
        scan_all(fs::path(config.root), discovered.files, config.scan_threads);

    std::vector<DescriptorScanInfo> descriptors;
    std::vector<FacesConfigInfo> faces_configs;
    std::vector<JavaScanInfo> javas;
    std::vector<PageScanInfo> pages;
    std::vector<DiscoveredFile> readable_files;
    for (std::size_t i = 0; i < discovered.files.size(); ++i) {
        PerFileScan& scan = scans[i];
        graph.add_diagnostics(std::move(scan.diagnostics));
        if (!scan.readable) continue;
        readable_files.push_back(discovered.files[i]);
        const std::string& path = discovered.files[i].path;
        if (scan.web_xml) {
            graph.add_diagnostics(std::move(scan.web_xml->diagnostics));
            descriptors.push_back({path, std::move(*scan.web_xml)});
        } else if (scan.faces) {
            graph.add_diagnostics(std::move(scan.faces->diagnostics));
            faces_configs.push_back({path, std::move(*scan.faces)});
        } else if (scan.java) {
            graph.add_diagnostics(std::move(scan.java->diagnostics));
            javas.push_back({path, std::move(scan.java->result)});
        } else if (scan.page) {
            graph.add_diagnostics(std::move(scan.page->diagnostics));
            pages.push_back({path, std::move(*scan.page)});
        }
    }

    // Evidence sets for classifying .java files as bean classes.
    std::set<std::string> config_registered_classes;
    for (const auto& f : faces_configs)
        for (const ManagedBeanRegistration& reg : f.faces.registrations)
            config_registered_classes.insert(reg.bean_class);
    std::set<std::string> use_bean_classes;
    for (const auto& p : pages)
        for (const UseBeanDecl& ub : p.result.use_beans)
            use_bean_classes.insert(ub.class_name);

    std::unordered_map<std::string, std::string> class_to_artifact;  // FQN -> artifact id
    std::unordered_map<std::string, std::string> url_path_to_page;   // "/rel/path" -> artifact id
    std::unordered_map<std::string, const JavaScanResult*> java_by_path;
    for (const auto& j : javas) java_by_path.emplace(j.path, &j.result);

    for (const DiscoveredFile& file : readable_files) {
        Artifact artifact{file.path, file.kind, file.path, {}};
        if (is_java_kind(file.kind)) {
            const JavaScanResult* scan = java_by_path.count(file.path) ? java_by_path.at(file.path)
                                                                       : nullptr;
            if (scan) {
                bool servlet_evidence = scan->servlet_kind != ServletKind::NotAServlet ||
                                        !scan->web_servlet_patterns.empty();
                bool bean_evidence =
                    scan->managed_bean.has_value() ||
                    (!scan->type_name.empty() &&
                     (config_registered_classes.contains(scan->type_name) ||
                      use_bean_classes.contains(scan->type_name))) ||
                    (scan->bean_traits.is_serializable && scan->bean_traits.has_no_arg_constructor &&
                     !scan->bean_traits.property_pairs.empty());
                if (file.kind == ArtifactKind::OtherJavaType)
                    artifact.kind = servlet_evidence  ? ArtifactKind::ServletClass
                                    : bean_evidence   ? ArtifactKind::BeanClass
                                                      : ArtifactKind::OtherJavaType;
                if (!scan->type_name.empty()) {
                    artifact.logical_names.push_back(scan->type_name);
                    class_to_artifact.emplace(scan->type_name, artifact.id);
                }
            }
        }
        if (is_page_kind(file.kind)) url_path_to_page.emplace("/" + file.path, artifact.id);
        graph.add_artifact(std::move(artifact));
    }

    std::vector<Diagnostic> table_diagnostics;
    UrlMappingTable table = build_mapping_table(descriptors, javas, table_diagnostics);
    BeanRegistry registry = build_bean_registry(faces_configs, javas, pages, table_diagnostics);
    graph.add_diagnostics(std::move(table_diagnostics));

    auto add_logical_name = [&graph](const std::string& artifact_id, const std::string& name) {
        for (Artifact& a : graph.artifacts())
            if (a.id == artifact_id) {
                a.logical_names.push_back(name);
                return;
            }
    };

    // An effective declaration target resolved to a discovered artifact.
    auto resolve_declaration_target =
        [&](const ServletTarget& target) -> std::optional<std::string> {
        if (target.kind == ServletTarget::Kind::Class) {
            if (auto it = class_to_artifact.find(target.value); it != class_to_artifact.end())
                return it->second;
            return std::nullopt;
        }
        std::string path = target.value.starts_with("/") ? target.value : "/" + target.value;
        if (auto it = url_path_to_page.find(path); it != url_path_to_page.end()) return it->second;
        return std::nullopt;
    };

    // Alias servlet-names and bean names onto the artifacts they denote.
    for (const auto& [name, target] : table.declarations)
        if (std::optional<std::string> id = resolve_declaration_target(target))
            add_logical_name(*id, name);
    for (const auto& [name, entry] : registry.global_entries())
        if (auto it = class_to_artifact.find(entry.bean_class); it != class_to_artifact.end())
            add_logical_name(it->second, name);

    auto admit_edge = [&](DependencyEdge edge) {
        if (!config.include_unresolved &&
            (edge.target.variant == TargetRef::Variant::UnresolvedUrl ||
             edge.target.variant == TargetRef::Variant::BeanRef))
            return;
        graph.add_edge(std::move(edge));
    };

    // UrlMapping edges: one per servlet declaration, from the descriptor that
    // holds it. The first declaration of each name is the effective one and
    // carries that name's url-patterns; later duplicates keep their location
    // and init-params so the conflict stays visible in the graph.
    std::set<std::string> effective_seen;
    for (const auto& d : descriptors) {
        for (const ServletDeclaration& decl : d.web_xml.declarations) {
            DependencyEdge edge;
            edge.source = d.path;
            edge.kind = EdgeKind::UrlMapping;
            edge.location = decl.location;
            edge.params = decl.init_params;
            edge.attributes.emplace_back("servlet-name", decl.servlet_name);
            if (effective_seen.insert(decl.servlet_name).second)
                for (const ServletMapping& mapping : d.web_xml.mappings)
                    if (mapping.servlet_name == decl.servlet_name)
                        for (const std::string& raw : mapping.url_patterns)
                            edge.attributes.emplace_back("url-pattern", raw);
            if (std::optional<std::string> id = resolve_declaration_target(decl.target)) {
                edge.target = TargetRef::resolved(*id);
            } else if (decl.target.kind == ServletTarget::Kind::Class) {
                edge.target = TargetRef::unresolved_url(decl.target.value);
            } else {
                std::string path = decl.target.value.starts_with("/") ? decl.target.value
                                                                      : "/" + decl.target.value;
                edge.target = TargetRef::unresolved_url(path);
            }
            admit_edge(std::move(edge));
        }
    }

    // Shared URL resolution: normalize, try the mapping table, then fall back
    // to a page whose path equals the URL path.
    auto resolve_url_target = [&](const std::string& raw_url, const std::string& from_dir,
                                  const SourceLocation& location) -> TargetRef {
        NormalizedUrl normalized = normalize_url(raw_url, from_dir, config.context_path);
        if (normalized.external) return TargetRef::external(normalized.value);
        if (normalized.escaped_above_root)
            graph.add_diagnostic(make_warning(
                diag::kPathEscape, "URL '" + raw_url + "' escapes the application root",
                location));
        ResolveOptions options{config.case_insensitive_extensions};
        if (std::optional<ResolvedHandler> handler = resolve(normalized.value, table, options)) {
            if (auto decl = table.declarations.find(handler->servlet_name);
                decl != table.declarations.end())
                if (std::optional<std::string> id = resolve_declaration_target(decl->second))
                    return TargetRef::resolved(*id);
            return TargetRef::unresolved_url(normalized.value);
        }
        if (auto it = url_path_to_page.find(normalized.value); it != url_path_to_page.end())
            return TargetRef::resolved(it->second);
        return TargetRef::unresolved_url(normalized.value);
    };

    auto dispatcher_edge = [&](const std::string& source, const DispatcherCall& call,
                               EdgeKind forward_kind, EdgeKind include_kind,
                               const std::string& from_dir) {
        DependencyEdge edge;
        edge.source = source;
        edge.kind = call.method == DispatcherCall::Method::Forward ? forward_kind : include_kind;
        edge.location = call.location;
        edge.attributes.emplace_back("scenario", scenario_name(call.scenario));
        edge.target = call.url.kind == UrlArg::Kind::Literal
                          ? resolve_url_target(call.url.value, from_dir, call.location)
                          : TargetRef::dynamic_url(call.url.value);
        admit_edge(std::move(edge));
    };

    // Bean reference: page-scoped useBean ids shadow global bean names.
    auto resolve_bean_target = [&](const std::string& page, const std::string& bean_name,
                                   const std::string& member) -> TargetRef {
        if (std::optional<BeanRegistry::Lookup> found = registry.lookup(page, bean_name))
            if (auto it = class_to_artifact.find(found->bean_class); it != class_to_artifact.end())
                return TargetRef::resolved(it->second);
        return TargetRef::bean(bean_name, member);
    };

    // EL expression -> one ElReference edge per non-implicit reference chain.
    auto add_el_edges = [&](const std::string& source, const std::string& scope_page,
                            const std::string& raw, const SourceLocation& location,
                            EdgeKind kind,
                            std::vector<std::pair<std::string, std::string>> extra_attributes) {
        ElParseOutput parsed = parse_el(raw);
        for (Diagnostic d : parsed.diagnostics) {
            d.location = location;
            graph.add_diagnostic(std::move(d));
        }
        std::string delimiter =
            parsed.expr.delimiter == ElExpression::Delimiter::Dollar ? "$" : "#";
        for (const ElReferencePath& path : parsed.expr.references) {
            if (path.implicit_object) continue;
            std::string full = to_string(path);
            std::string member =
                full.size() > path.base.size() ? full.substr(path.base.size() + 1) : std::string();
            DependencyEdge edge;
            edge.source = source;
            edge.kind = kind;
            edge.location = location;
            edge.attributes = extra_attributes;
            edge.attributes.emplace_back("expression", raw);
            edge.attributes.emplace_back("delimiter", delimiter);
            if (!member.empty()) edge.attributes.emplace_back("member", member);
            edge.target = resolve_bean_target(scope_page, path.base, member);
            admit_edge(std::move(edge));
        }
    };

    for (const auto& p : pages) {
        std::string dir = page_directory(p.path);
        for (const RawPageRef& ref : p.result.refs) {
            DependencyEdge edge;
            edge.source = p.path;
            edge.kind = ref.mechanism;
            edge.location = ref.location;
            edge.params = ref.params;
            edge.attributes = ref.attributes;
            switch (ref.mechanism) {
                case EdgeKind::UseBean: {
                    // url_or_name is the bean class.
                    if (auto it = class_to_artifact.find(ref.url_or_name);
                        it != class_to_artifact.end()) {
                        edge.target = TargetRef::resolved(it->second);
                    } else {
                        const std::string* id = attribute_value(ref.attributes, "id");
                        edge.target = TargetRef::bean(id ? *id : ref.url_or_name);
                        edge.attributes.emplace_back("class", ref.url_or_name);
                    }
                    break;
                }
                case EdgeKind::BeanGetProperty:
                case EdgeKind::BeanSetProperty: {
                    // url_or_name is the bean id.
                    const std::string* property = attribute_value(ref.attributes, "property");
                    edge.target = resolve_bean_target(p.path, ref.url_or_name,
                                                      property ? *property : std::string());
                    break;
                }
                default: {
                    edge.target = embeds_el(ref.url_or_name)
                                      ? TargetRef::dynamic_url("URL embeds an EL expression")
                                      : resolve_url_target(ref.url_or_name, dir, ref.location);
                    break;
                }
            }
            admit_edge(std::move(edge));
        }
        for (const DispatcherCall& call : p.result.scriptlet_findings)
            dispatcher_edge(p.path, call, EdgeKind::ScriptletDispatchForward,
                            EdgeKind::ScriptletDispatchInclude, dir);
        for (const ElOccurrence& occurrence : p.result.el_expressions)
            add_el_edges(p.path, p.path, occurrence.raw, occurrence.location,
                         EdgeKind::ElReference, {});
    }

    for (const auto& j : javas) {
        for (const DispatcherCall& call : j.result.dispatcher_calls)
            dispatcher_edge(j.path, call, EdgeKind::DispatchForward, EdgeKind::DispatchInclude,
                            "/");
        for (const ManagedPropertyField& mp : j.result.managed_properties) {
            if (!embeds_el(mp.value)) continue;  // literal injection, no bean dependency
            add_el_edges(j.path, std::string(), mp.value, mp.location,
                         EdgeKind::ManagedPropertyInjection, {{"property", mp.field_name}});
        }
    }

    // Managed-property entries in faces-config: the dependency belongs to the
    // registered bean class; the config artifact stands in when that class is
    // not part of the project.
    for (const auto& f : faces_configs) {
        for (const ManagedBeanRegistration& reg : f.faces.registrations) {
            std::string source = f.path;
            if (auto it = class_to_artifact.find(reg.bean_class); it != class_to_artifact.end())
                source = it->second;
            for (const auto& [property, value] : reg.properties) {
                if (!embeds_el(value)) continue;
                add_el_edges(source, std::string(), value, reg.source.location,
                             EdgeKind::ManagedPropertyInjection, {{"property", property}});
            }
        }
    }

    return graph.normalized();
}

}  // namespace jeedep
