#include <doctest.h>

#include "jeedep/java_scan.hpp"

using namespace jeedep;

TEST_CASE("an HttpServlet subclass is recognized without compiling it") {
    JavaScanOutput output = scan_java_source(
        "// Import required java libraries\n"
        "import java.io.*;\n"
        "import javax.servlet.*;\n"
        "import javax.servlet.http.*;\n"
        "\n"
        "// Extend HttpServlet class\n"
        "public class ServletExample extends HttpServlet {\n"
        "\n"
        "    public void init() throws ServletException {\n"
        "    }\n"
        "\n"
        "    public void service(ServletRequest request, ServletResponse response)\n"
        "    throws ServletException, IOException {\n"
        "    }\n"
        "\n"
        "    public void doGet(HttpServletRequest request, HttpServletResponse response)\n"
        "    throws ServletException, IOException {\n"
        "    }\n"
        "\n"
        "    public void destroy() {\n"
        "    }\n"
        "}\n",
        "ServletExample.java");
    const JavaScanResult& result = output.result;
    CHECK(result.type_name == "ServletExample");
    CHECK(result.servlet_kind == ServletKind::HttpServlet);
    CHECK(result.web_servlet_patterns.empty());
    CHECK(result.dispatcher_calls.empty());
    CHECK_FALSE(result.bean_traits.is_serializable);
    CHECK(result.bean_traits.has_no_arg_constructor);  // implicit default constructor
    CHECK(output.diagnostics.empty());
}

TEST_CASE("WebServlet annotations yield patterns in both argument forms") {
    JavaScanOutput single = scan_java_source(
        "@WebServlet(\"/ServletURL\")\n"
        "public class MyFirstServlet extends HttpServlet {\n"
        "}\n",
        "MyFirstServlet.java");
    REQUIRE(single.result.web_servlet_patterns.size() == 1);
    CHECK(single.result.web_servlet_patterns[0] ==
          WebServletPattern{"/ServletURL", {"MyFirstServlet.java", 1, 13}});

    JavaScanOutput multi = scan_java_source(
        "@WebServlet(urlPatterns = {\"/myHTMLPage.html\", \"/myJSPPage.jsp\", "
        "\"/myJSFPage.xhtml\"})\n"
        "public class MySecondServlet extends HttpServlet {\n"
        "}\n",
        "MySecondServlet.java");
    REQUIRE(multi.result.web_servlet_patterns.size() == 3);
    CHECK(multi.result.web_servlet_patterns[0].pattern == "/myHTMLPage.html");
    CHECK(multi.result.web_servlet_patterns[1].pattern == "/myJSPPage.jsp");
    CHECK(multi.result.web_servlet_patterns[2].pattern == "/myJSFPage.xhtml");
}

TEST_CASE("dispatcher calls are found in two-statement and chained form") {
    JavaScanOutput output = scan_java_source(
        "@WebServlet(\"/ServletURL\")\n"                                    // 1
        "public class MyFirstServlet extends HttpServlet {\n"               // 2
        "\n"                                                                // 3
        "    public void doGet(HttpServletRequest request, HttpServletResponse response)\n"
        "            throws ServletException, IOException {\n"              // 5
        "        RequestDispatcher dispatcher =\n"                          // 6
        "                getServletContext().getRequestDispatcher(\"/MySecondServlet\");\n"
        "        dispatcher.include(request, response);\n"                  // 8
        "\n"                                                                // 9
        "        RequestDispatcher dispatcher =\n"                          // 10
        "                getServletContext().getRequestDispatcher(\"/MySecondServlet\");\n"
        "        dispatcher.forward(request, response);\n"                  // 12
        "\n"                                                                // 13
        "        getServletContext().getRequestDispatcher(\"/MySecondServlet\").forward(request, response);\n"
        "    }\n"                                                           // 15
        "}\n",                                                              // 16
        "MyFirstServlet.java");

    const std::vector<DispatcherCall>& calls = output.result.dispatcher_calls;
    REQUIRE(calls.size() == 3);

    CHECK(calls[0] == DispatcherCall{UrlArg::literal("/MySecondServlet"),
                                     DispatcherCall::Method::Include,
                                     {"MyFirstServlet.java", 8, 20},
                                     DispatcherCall::Scenario::TwoStatement});
    CHECK(calls[1] == DispatcherCall{UrlArg::literal("/MySecondServlet"),
                                     DispatcherCall::Method::Forward,
                                     {"MyFirstServlet.java", 12, 20},
                                     DispatcherCall::Scenario::TwoStatement});
    CHECK(calls[2] == DispatcherCall{UrlArg::literal("/MySecondServlet"),
                                     DispatcherCall::Method::Forward,
                                     {"MyFirstServlet.java", 14, 70},
                                     DispatcherCall::Scenario::Chained});
}

TEST_CASE("dispatcher URLs built at runtime are reported as dynamic") {
    JavaScanOutput output = scan_java_source(
        "class A { void f() {\n"
        "  getServletContext().getRequestDispatcher(prefix + \"/x\").forward(q, r);\n"
        "} }\n",
        "A.java");
    REQUIRE(output.result.dispatcher_calls.size() == 1);
    const DispatcherCall& call = output.result.dispatcher_calls[0];
    CHECK(call.url.kind == UrlArg::Kind::Dynamic);
    CHECK(call.method == DispatcherCall::Method::Forward);
    CHECK(call.scenario == DispatcherCall::Scenario::Chained);
}

TEST_CASE("comments and string literals never produce dispatcher findings") {
    JavaScanOutput output = scan_java_source(
        "class A {\n"
        "  // getServletContext().getRequestDispatcher(\"/a\").forward(x, y);\n"
        "  /* RequestDispatcher d = getRequestDispatcher(\"/b\");\n"
        "     d.forward(x, y); */\n"
        "  String s = \"getServletContext().getRequestDispatcher(\\\"/c\\\").forward(x,y);\";\n"
        "}\n",
        "A.java");
    CHECK(output.result.dispatcher_calls.empty());
}

TEST_CASE("bean traits come from implements, constructors, and accessor pairs") {
    JavaScanOutput output = scan_java_source(
        "public class Student implements java.io.Serializable {\n"
        "\n"
        "    private String name;\n"
        "    private int ID;\n"
        "\n"
        "    public Student (){\n"
        "    }\n"
        "\n"
        "    public String getName() {\n"
        "        return this.name;\n"
        "    }\n"
        "\n"
        "    public int getId() {\n"
        "        return this.id;\n"
        "    }\n"
        "\n"
        "    public void setName(String name) {\n"
        "        this.name = name;\n"
        "    }\n"
        "\n"
        "    public void setId(int id) {\n"
        "        this.id = id;\n"
        "    }\n"
        "}\n",
        "Student.java");
    const BeanTraits& traits = output.result.bean_traits;
    CHECK(traits.is_serializable);
    CHECK(traits.has_no_arg_constructor);
    CHECK(traits.property_pairs == std::vector<std::string>{"id", "name"});
    CHECK(output.result.servlet_kind == ServletKind::NotAServlet);
}

TEST_CASE("a parameterized constructor without a no-arg overload is reported") {
    JavaScanOutput output = scan_java_source(
        "class Point { Point(int x) {} int getX() { return 1; } void setX(int x) {} }\n",
        "Point.java");
    CHECK_FALSE(output.result.bean_traits.has_no_arg_constructor);
    CHECK(output.result.bean_traits.property_pairs == std::vector<std::string>{"x"});
}

TEST_CASE("ManagedBean and ManagedProperty annotations are extracted") {
    JavaScanOutput output = scan_java_source(
        "package myPackage;\n"
        "\n"
        "@ManagedBean(name = \"YouCanUseME\")\n"
        "public class MyBean {\n"
        "\n"
        "    @ManagedProperty(value=\"#{message}\")\n"
        "    private Message message;\n"
        "}\n",
        "myPackage/MyBean.java");
    const JavaScanResult& result = output.result;
    CHECK(result.type_name == "myPackage.MyBean");
    REQUIRE(result.managed_bean.has_value());
    CHECK(*result.managed_bean ==
          ManagedBeanAnnotation{"YouCanUseME", {"myPackage/MyBean.java", 3, 1}});
    REQUIRE(result.managed_properties.size() == 1);
    CHECK(result.managed_properties[0] ==
          ManagedPropertyField{"message", "#{message}",
                               {"myPackage/MyBean.java", 6, 5}});
}

TEST_CASE("ManagedBean without a name defaults to the decapitalized class name") {
    JavaScanOutput output = scan_java_source(
        "@ManagedBean\npublic class Message {}\n", "Message.java");
    REQUIRE(output.result.managed_bean.has_value());
    CHECK(output.result.managed_bean->name == "message");
}

TEST_CASE("generic servlets and non-servlets are told apart") {
    CHECK(scan_java_source("class G extends GenericServlet {}", "G.java")
              .result.servlet_kind == ServletKind::GenericServlet);
    CHECK(scan_java_source("class P extends Object {}", "P.java")
              .result.servlet_kind == ServletKind::NotAServlet);
}

TEST_CASE("unbalanced sources still scan, with a warning") {
    JavaScanOutput output = scan_java_source(
        "class A { void f() {\n"
        "  getServletContext().getRequestDispatcher(\"/x\").forward(q, r);\n",
        "A.java");
    REQUIRE(output.diagnostics.size() == 1);
    CHECK(output.diagnostics[0].code == diag::kUnbalancedSource);
    CHECK(output.result.dispatcher_calls.size() == 1);
}

TEST_CASE("embedded snippets report locations relative to the page") {
    std::vector<DispatcherCall> calls = find_dispatcher_calls(
        "getServletContext().getRequestDispatcher(\"/p\").forward(req, res);\n"
        "getServletContext().getRequestDispatcher(\"/q\").include(req, res);",
        5, 10);
    REQUIRE(calls.size() == 2);
    // First line: columns continue from the snippet's starting column.
    CHECK(calls[0].location.line == 5);
    CHECK(calls[0].location.column == 57);
    // Later lines: columns restart at 1.
    CHECK(calls[1].location.line == 6);
    CHECK(calls[1].location.column == 48);
}
