#ifndef NS1D_GRID_HPP_
#define NS1D_GRID_HPP_

#include <functional>
#include <vector>

namespace ns1d {

/// Uniform staggered mesh on [0,1]: n cells of width dx = 1/n.
/// Cell centers sit at (i+1/2)dx for i = 0..n-1, faces at j*dx for j = 0..n.
/// Density-like quantities live on cells, velocity-like quantities on faces,
/// so the endpoint values u_0 and u_n are genuine unknowns that the no-slip
/// condition pins to zero.
struct Grid {
  explicit Grid(int cell_count);

  int n;      ///< number of cells (>= 4)
  double dx;  ///< cell width, 1/n

  double cell_center(int i) const { return (i + 0.5) * dx; }
  double face_position(int j) const { return j * dx; }
};

/// n samples at cell centers.
struct CellField {
  std::vector<double> v;

  CellField() = default;
  explicit CellField(std::size_t n, double fill = 0.0) : v(n, fill) {}

  std::size_t size() const { return v.size(); }
  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

/// n+1 samples at faces.
struct FaceField {
  std::vector<double> v;

  FaceField() = default;
  explicit FaceField(std::size_t n_faces, double fill = 0.0) : v(n_faces, fill) {}

  std::size_t size() const { return v.size(); }
  double& operator[](std::size_t j) { return v[j]; }
  double operator[](std::size_t j) const { return v[j]; }
};

/// Sample a function at cell centers / faces.
CellField sample_cells(const std::function<double(double)>& f, const Grid& grid);
FaceField sample_faces(const std::function<double(double)>& f, const Grid& grid);

/// Midpoint-rule integral over [0,1]: dx * sum(field).  Exact for cellwise-constant
/// and (by symmetry of midpoints) for affine data.
double integrate(const CellField& field, const Grid& grid);

/// Discrete L^p norm, (dx * sum |v|^p)^{1/p}; p = infinity gives max |v|.
/// Cell and face variants share the uniform dx weight.
double lp_norm(const CellField& field, double p, const Grid& grid);
double lp_norm(const FaceField& field, double p, const Grid& grid);
double lp_norm(const std::vector<double>& values, double p, double dx);

/// Derivative of a face field at cell centers: (u_{j+1} - u_j)/dx.  Exact for affine u.
CellField face_gradient(const FaceField& u, const Grid& grid);

/// Derivative of a cell field at the n-1 interior faces: (rho_{i+1} - rho_i)/dx.
/// Boundary faces are deliberately excluded; the density carries no boundary
/// condition and one-sided stencils would contaminate gradient norms.
std::vector<double> cell_gradient(const CellField& rho, const Grid& grid);

/// W^{1,p} seminorm-plus-norm of a face field: lp_norm(u) + lp_norm(u_x).
double w1p_norm(const FaceField& u, double p, const Grid& grid);

}  // namespace ns1d

#endif  // NS1D_GRID_HPP_
