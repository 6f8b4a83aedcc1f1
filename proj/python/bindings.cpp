#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrs/expr.hpp"
#include "qrs/modules.hpp"
#include "qrs/verify.hpp"

namespace py = pybind11;
using namespace qrs;

namespace {

py::dict report_dict(const Report& rep) {
    py::dict d;
    d["suite"] = rep.suite;
    d["pass"] = rep.ok();
    py::list entries;
    for (const auto& e : rep.entries) {
        py::dict je;
        je["id"] = e.id;
        je["instance"] = e.instance;
        je["pass"] = e.pass;
        if (!e.pass) je["witness"] = e.witness;
        entries.append(je);
    }
    d["entries"] = entries;
    return d;
}

std::optional<Parent> parent_of(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "U") return Parent::U;
    if (s == "B") return Parent::B;
    if (s == "Bbar") return Parent::Bbar;
    if (s == "Env") return Parent::Env;
    throw py::value_error("parent must be one of U, B, Bbar, Env");
}

/// One session over a fixed Cartan type: owns the algebra and its caches.
class Workbench {
public:
    explicit Workbench(const std::string& type)
        : alg_(CartanData::make(type)), pr_(alg_), can_(pr_), proj_(can_) {}

    std::string type() const { return alg_.cartan().name(); }
    int rank() const { return alg_.rank(); }

    std::string nf(const std::string& expr, const std::string& parent) const {
        return alg_.normal_form(parse_element(alg_, expr, parent_of(parent))).str();
    }

    Scalar pair(const std::string& x, const std::string& y) const {
        return pr_.pair(parse_element(alg_, x, Parent::U),
                        parse_element(alg_, y, Parent::U));
    }

    py::dict gram(const Weight& beta) const {
        const GramData& g = pr_.gram(beta);
        py::dict d;
        d["beta"] = g.beta;
        py::list rows;
        for (const auto& row : g.gram) {
            py::list r;
            for (const auto& x : row) r.append(x.str());
            rows.append(r);
        }
        d["gram"] = rows;
        d["det"] = g.det.str();
        d["dim"] = g.plus_basis.size();
        return d;
    }

    std::vector<std::string> dual_basis(const Weight& beta) const {
        std::vector<std::string> out;
        for (const auto& y : pr_.dual_basis(beta)) out.push_back(y.str());
        return out;
    }

    std::string coproduct(const std::string& expr, const std::string& variant) const {
        CoproductKind kind;
        if (variant == "std")
            kind = CoproductKind::Std;
        else if (variant == "right")
            kind = CoproductKind::Right;
        else if (variant == "left")
            kind = CoproductKind::Left;
        else if (variant == "bottom")
            kind = CoproductKind::Bottom;
        else
            throw py::value_error("variant must be std, right, left or bottom");
        return qrs::coproduct(alg_, kind,
                              parse_element(alg_, expr, coproduct_source(kind)))
            .str();
    }

    std::string antipode(const std::string& expr, bool inverse) const {
        return qrs::antipode(alg_, parse_element(alg_, expr, Parent::U),
                             inverse ? AntipodeDir::SInv : AntipodeDir::S)
            .str();
    }

    std::string phi(const std::string& expr) const {
        return qrs::phi(alg_, parse_element(alg_, expr, Parent::Bbar)).str();
    }

    std::string psi(const std::string& expr) const {
        return qrs::psi(alg_, parse_element(alg_, expr, Parent::U)).str();
    }

    py::dict gamma(int height, bool closed_form) const {
        const GradedElement g =
            closed_form ? proj_.gamma_closed_rank1(height) : proj_.gamma(height);
        py::dict d;
        for (const auto& [w, e] : g.grades) d[py::tuple(py::cast(w))] = e.str();
        return d;
    }

    py::dict casimir(int height) const {
        py::dict d;
        for (const auto& [w, e] : can_.casimir(height).grades)
            d[py::tuple(py::cast(w))] = e.str();
        return d;
    }

    py::dict verma(const Weight& lambda, int depth) const {
        VermaModule M(alg_, lambda, depth);
        py::dict d;
        d["lambda"] = lambda;
        d["depth"] = depth;
        py::list slices;
        for (const auto& beta : alg_.positive_weights_upto(depth)) {
            py::dict s;
            s["beta"] = beta;
            s["dim"] = M.slice_dim(beta);
            s["kernel_dim"] = M.kernel_slice(beta).size();
            slices.append(s);
        }
        d["slices"] = slices;
        return d;
    }

private:
    Algebra alg_;
    SkewPairing pr_;
    Canonical can_;
    Projector proj_;
};

}  // namespace

PYBIND11_MODULE(_qrs, m) {
    m.doc() =
        "exact computations in two-parameter quantum groups and their Kashiwara "
        "algebras over Q(r,s)";

    py::register_exception<DivisionByZero>(m, "DivisionByZero");
    py::register_exception<PoleAtPoint>(m, "PoleAtPoint");
    py::register_exception<SyntaxError>(m, "ExprSyntaxError");
    py::register_exception<Error>(m, "QrsError");

    py::class_<Scalar>(m, "Scalar")
        .def(py::init([](const std::string& text) { return Scalar::parse(text); }))
        .def(py::init([](long long v) { return Scalar(v); }))
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("pow", &Scalar::pow)
        .def("is_zero", &Scalar::is_zero)
        .def("substitute", [](const Scalar& s, long long rn, long long rd, long long sn,
                              long long sd) {
            mpq_class rv(static_cast<long>(rn), static_cast<long>(rd));
            mpq_class sv(static_cast<long>(sn), static_cast<long>(sd));
            rv.canonicalize();
            sv.canonicalize();
            mpq_class out = s.substitute(rv, sv);
            return py::make_tuple(out.get_num().get_str(), out.get_den().get_str());
        },
             py::arg("r_num"), py::arg("r_den") = 1, py::arg("s_num") = 1,
             py::arg("s_den") = 1);

    m.def("q_number",
          [](int n, const Scalar& v) { return q_number(n, v); });
    m.def("q_binomial",
          [](int n, int k, const Scalar& v) { return q_binomial(n, k, v); });

    py::class_<Workbench>(m, "Workbench")
        .def(py::init<const std::string&>(), py::arg("type"))
        .def_property_readonly("type", &Workbench::type)
        .def_property_readonly("rank", &Workbench::rank)
        .def("nf", &Workbench::nf, py::arg("expr"), py::arg("parent") = "")
        .def("pair", &Workbench::pair)
        .def("gram", &Workbench::gram)
        .def("dual_basis", &Workbench::dual_basis)
        .def("coproduct", &Workbench::coproduct, py::arg("expr"),
             py::arg("variant") = "std")
        .def("antipode", &Workbench::antipode, py::arg("expr"),
             py::arg("inverse") = false)
        .def("phi", &Workbench::phi)
        .def("psi", &Workbench::psi)
        .def("gamma", &Workbench::gamma, py::arg("height"),
             py::arg("closed_form") = false)
        .def("casimir", &Workbench::casimir)
        .def("verma", &Workbench::verma, py::arg("lambda_"), py::arg("depth"));

    m.def(
        "verify",
        [](const std::string& suite, const std::string& type, int height, int depth,
           std::optional<std::vector<int>> lambda, unsigned long seed) {
            Config cfg;
            cfg.type = type;
            cfg.height = height;
            cfg.depth = depth;
            cfg.lambda = std::move(lambda);
            cfg.seed = seed;
            return report_dict(run_suite(suite, cfg));
        },
        py::arg("suite"), py::arg("type") = "A1", py::arg("height") = 3,
        py::arg("depth") = 4, py::arg("lambda_") = std::nullopt,
        py::arg("seed") = 12345UL,
        "run a verification suite and return its report");

    m.def("suites", [] { return suite_names(); });
}
