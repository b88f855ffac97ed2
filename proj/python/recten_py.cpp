#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recten/bounds.hpp"
#include "recten/error.hpp"
#include "recten/inclusion.hpp"
#include "recten/io.hpp"
#include "recten/oracle.hpp"
#include "recten/random.hpp"
#include "recten/tensor.hpp"

namespace py = pybind11;
using namespace recten;

namespace {

using PyEntry = std::tuple<std::vector<int>, std::vector<int>, double>;

RectangularTensor make_tensor(int p, int q, int m, int n, const std::vector<PyEntry>& entries) {
  std::vector<Entry> converted;
  converted.reserve(entries.size());
  for (const auto& [rows, cols, v] : entries) converted.push_back({MultiIndex(rows), MultiIndex(cols), v});
  return RectangularTensor({p, q, m, n}, std::move(converted));
}

IndexSubset subset(const RectangularTensor& a, const std::vector<int>& members) { return IndexSubset(members, a.n()); }

py::tuple as_tuple(const BoundPair& b) { return py::make_tuple(b.lower, b.upper); }

py::dict as_dict(const BoundsReport& r) {
  py::dict d;
  d["subset"] = r.subset.members();
  d["yang_qi"] = as_tuple(r.yang_qi);
  d["lu"] = as_tuple(r.lu);
  d["theta_phi"] = as_tuple(r.theta_phi);
  return d;
}

Objective objective_from(const std::string& name) {
  if (auto o = parse_objective(name)) return *o;
  throw ValidationError("unknown objective \"" + name + "\"");
}

}  // namespace

PYBIND11_MODULE(_recten, m) {
  m.doc() = "S-type singular value inclusion sets and bounds for rectangular tensors";

  py::register_exception<Error>(m, "RectenError", PyExc_ValueError);

  py::class_<RectangularTensor>(m, "RectangularTensor")
      .def(py::init(&make_tensor), py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"),
           py::arg("entries") = std::vector<PyEntry>{},
           "entries: list of (row indices, column indices, value), 1-based")
      .def_property_readonly("p", &RectangularTensor::p)
      .def_property_readonly("q", &RectangularTensor::q)
      .def_property_readonly("m", &RectangularTensor::m)
      .def_property_readonly("n", &RectangularTensor::n)
      .def_property_readonly("nnz", &RectangularTensor::nnz)
      .def_property_readonly("row_sums", &RectangularTensor::row_sums)
      .def_property_readonly("col_sums", &RectangularTensor::col_sums)
      .def("is_nonnegative", &RectangularTensor::is_nonnegative)
      .def("entries",
           [](const RectangularTensor& a) {
             std::vector<PyEntry> out;
             for (const Entry& e : a.entries()) out.emplace_back(e.rows.components(), e.cols.components(), e.value);
             return out;
           })
      .def("__eq__", [](const RectangularTensor& a, const RectangularTensor& b) { return a == b; })
      .def("__repr__", [](const RectangularTensor& a) {
        return "<RectangularTensor p=" + std::to_string(a.p()) + " q=" + std::to_string(a.q()) +
               " m=" + std::to_string(a.m()) + " n=" + std::to_string(a.n()) + " nnz=" + std::to_string(a.nnz()) +
               ">";
      });

  m.def("parse_tensor", [](const std::string& text) { return parse_tensor(text); });
  m.def("load_tensor", [](const std::string& path) { return load_tensor(path); });
  m.def("serialize_tensor", &serialize_tensor);
  m.def("random_tensor",
        [](int p, int q, int m_, int n, double density, std::uint64_t seed, bool allow_negative) {
          return random_tensor({{p, q, m_, n}, density, 10.0, allow_negative}, seed);
        },
        py::arg("p"), py::arg("q"), py::arg("m"), py::arg("n"), py::arg("density") = 1.0, py::arg("seed") = 42,
        py::arg("allow_negative") = false);

  m.def("row_sum", &row_sum);
  m.def("col_sum", &col_sum);
  m.def("r_offdiag", &r_offdiag);
  m.def("c_offdiag", &c_offdiag);
  m.def("r_partition", [](const RectangularTensor& a, int i, const std::vector<int>& s) {
    const PartitionSum r = r_partition(a, i, subset(a, s));
    return py::make_tuple(r.in, r.out);
  });
  m.def("c_partition", [](const RectangularTensor& a, int j, const std::vector<int>& s) {
    const PartitionSum r = c_partition(a, j, subset(a, s));
    return py::make_tuple(r.in, r.out);
  });
  m.def("contract_left", [](const RectangularTensor& a, const std::vector<double>& x, const std::vector<double>& y) {
    return contract_left(a, x, y);
  });
  m.def("contract_right", [](const RectangularTensor& a, const std::vector<double>& x, const std::vector<double>& y) {
    return contract_right(a, x, y);
  });

  py::class_<Disk>(m, "Disk")
      .def_property_readonly("family", [](const Disk& d) { return std::string(to_string(d.family)); })
      .def_readonly("i", &Disk::i)
      .def_readonly("j", &Disk::j)
      .def_readonly("a", &Disk::a)
      .def_readonly("b", &Disk::b)
      .def_readonly("radius", &Disk::radius);

  py::class_<DiskReport>(m, "DiskReport")
      .def_property_readonly("method", [](const DiskReport& r) { return std::string(to_string(r.method)); })
      .def_property_readonly("subset", [](const DiskReport& r) { return r.subset.members(); })
      .def_readonly("disks", &DiskReport::disks)
      .def_readonly("union_radius", &DiskReport::union_radius)
      .def("contains", [](const DiskReport& r, std::complex<double> z, double tol) { return contains(r, z, tol); },
           py::arg("z"), py::arg("tolerance") = kDefaultTolerance);

  m.def("disk_radius", &disk_radius, py::arg("a"), py::arg("b"));
  m.def("upsilon_set", [](const RectangularTensor& a, const std::vector<int>& s) { return upsilon_set(a, subset(a, s)); });
  m.def("psi_set", [](const RectangularTensor& a, const std::vector<int>& s) { return psi_set(a, subset(a, s)); });

  m.def("yang_qi_bounds", [](const RectangularTensor& a) { return as_tuple(yang_qi_bounds(a)); });
  m.def("lu_bounds", [](const RectangularTensor& a, const std::vector<int>& s) {
    return as_tuple(lu_bounds(a, subset(a, s)));
  });
  m.def("theta_phi_bounds", [](const RectangularTensor& a, const std::vector<int>& s) {
    return as_tuple(theta_phi_bounds(a, subset(a, s)));
  });
  m.def("bounds_report", [](const RectangularTensor& a, const std::vector<int>& s) {
    return as_dict(bounds_report(a, subset(a, s)));
  });
  m.def("best_subset",
        [](const RectangularTensor& a, const std::string& objective, int max_n, unsigned threads) {
          return as_dict(best_subset(a, objective_from(objective), {max_n, threads}));
        },
        py::arg("a"), py::arg("objective") = "min-phi", py::arg("max_n") = kDefaultEnumerationCap,
        py::arg("threads") = 1);

  py::class_<SingularPair>(m, "SingularPair")
      .def_readonly("lambda_", &SingularPair::lambda)
      .def_readonly("x", &SingularPair::x)
      .def_readonly("y", &SingularPair::y)
      .def_readonly("residual", &SingularPair::residual)
      .def_readonly("iterations", &SingularPair::iterations)
      .def_readonly("start", &SingularPair::start)
      .def_property_readonly("status", [](const SingularPair& p) { return std::string(to_string(p.status)); });

  m.def("power_lambda_max",
        [](const RectangularTensor& a, double tol, long max_iter, int restarts, std::uint64_t seed, unsigned threads) {
          py::gil_scoped_release release;
          return power_lambda_max(a, {tol, max_iter, restarts, seed, threads});
        },
        py::arg("a"), py::arg("tol") = 1e-10, py::arg("max_iter") = 10000, py::arg("restarts") = 4,
        py::arg("seed") = 42, py::arg("threads") = 1);
  m.def("residual",
        [](const RectangularTensor& a, double lambda, const std::vector<double>& x, const std::vector<double>& y) {
          return residual(a, lambda, x, y);
        });

  m.def("verify_inclusion",
        [](const RectangularTensor& a, const std::vector<double>& candidates, const std::vector<int>& s,
           double tolerance) {
          const InclusionCheck check = verify_inclusion(a, candidates, subset(a, s), tolerance);
          py::list rows;
          for (const CandidateCheck& c : check.candidates) {
            py::dict row;
            row["value"] = c.value;
            row["in_psi"] = c.in_psi;
            row["in_upsilon"] = c.in_upsilon;
            row["violation"] = c.violation;
            rows.append(row);
          }
          py::dict d;
          d["psi_radius"] = check.psi_radius;
          d["upsilon_radius"] = check.upsilon_radius;
          d["all_inside"] = check.all_inside();
          d["candidates"] = rows;
          return d;
        },
        py::arg("a"), py::arg("candidates"), py::arg("s"), py::arg("tolerance") = kDefaultTolerance);
}
