#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rnckit/cli.hpp"
#include "rnckit/errors.hpp"

namespace py = pybind11;
using namespace rnckit;

namespace {

Json load(const std::string& text) {
    Json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError("$", "expected a document object");
    check_version(doc);
    return doc;
}

std::string emit(const cli::CommandOutput& o, bool text) { return text ? o.text : dump_document(o.doc); }

}  // namespace

PYBIND11_MODULE(_rnckit, m) {
    m.doc() = "Exact constructions and obstructions for rational normal curves; documents are JSON strings.";

    // Exception types live as long as the module; handles are released on purpose.
    static PyObject* error = py::exception<Error>(m, "Error").release().ptr();
    static PyObject* parse_error = py::exception<ParseError>(m, "ParseError", error).release().ptr();
    static PyObject* not_generic = py::exception<NotGeneric>(m, "NotGeneric", error).release().ptr();
    static PyObject* unsupported = py::exception<Unsupported>(m, "Unsupported", error).release().ptr();
    static PyObject* bad_shape = py::exception<BadShape>(m, "BadShape", error).release().ptr();
    static PyObject* obstruction_fails = py::exception<ObstructionFails>(m, "ObstructionFails", error).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        auto raise = [](PyObject* type, const py::tuple& args) { PyErr_SetObject(type, args.ptr()); };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            raise(parse_error, py::make_tuple(e.what(), e.location()));
        } catch (const NotGeneric& e) {
            raise(not_generic, py::make_tuple(e.what(), e.stage(), e.witness()));
        } catch (const Unsupported& e) {
            raise(unsupported, py::make_tuple(e.what()));
        } catch (const BadShape& e) {
            raise(bad_shape, py::make_tuple(e.what()));
        } catch (const ObstructionFails& e) {
            raise(obstruction_fails, py::make_tuple(e.what()));
        } catch (const Error& e) {
            raise(error, py::make_tuple(e.what()));
        }
    });

    m.attr("SCHEMA_VERSION") = kSchemaVersion;

    m.def(
        "run",
        [](const std::vector<std::string>& args, const std::string& input) {
            std::istringstream in(input);
            std::ostringstream out, err;
            const int code = cli::run(args, in, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("stdin") = "", "Run the command-line tool in process: (exit code, stdout, stderr).");

    m.def(
        "construct", [](const std::string& doc, bool text) { return emit(cli::construct_command(load(doc)), text); },
        py::arg("datum"), py::arg("text") = false);
    m.def(
        "verify", [](const std::string& doc, bool text) { return emit(cli::verify_command(load(doc)), text); },
        py::arg("document"), py::arg("text") = false);
    m.def(
        "obstruct", [](const std::string& doc, bool text) { return emit(cli::obstruct_command(load(doc)), text); },
        py::arg("datum"), py::arg("text") = false);
    m.def(
        "expect", [](int n, int p, int l, bool text) { return emit(cli::expect_command(n, p, l), text); },
        py::arg("n"), py::arg("p"), py::arg("l"), py::arg("text") = false);
    m.def(
        "hilbert", [](const std::string& doc, bool text) { return emit(cli::hilbert_command(load(doc)), text); },
        py::arg("scheme"), py::arg("text") = false);
    m.def(
        "ah_suite", [](std::uint64_t seed, bool text) { return emit(cli::ah_suite_command(seed), text); },
        py::arg("seed") = 1, py::arg("text") = false);
    m.def(
        "equivalent",
        [](const std::string& a, const std::string& b, bool text) {
            return emit(cli::equivalent_command(load(a), load(b)), text);
        },
        py::arg("a"), py::arg("b"), py::arg("text") = false);
    m.def(
        "random_datum",
        [](int n, int p, int l, std::uint64_t seed, bool oracle, bool text) {
            return emit(cli::random_datum_command(n, p, l, seed, oracle), text);
        },
        py::arg("n"), py::arg("p"), py::arg("l"), py::arg("seed") = 1, py::arg("oracle") = false,
        py::arg("text") = false);
}
