#include "ns1d/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ns1d {

namespace {

void require_cell_size(const CellField& f, const Grid& grid, const char* op) {
  if (f.size() != static_cast<std::size_t>(grid.n)) {
    throw std::invalid_argument(std::string(op) + ": cell field has " +
                                std::to_string(f.size()) + " entries, grid has " +
                                std::to_string(grid.n) + " cells");
  }
}

void require_face_size(const FaceField& f, const Grid& grid, const char* op) {
  if (f.size() != static_cast<std::size_t>(grid.n) + 1) {
    throw std::invalid_argument(std::string(op) + ": face field has " +
                                std::to_string(f.size()) + " entries, grid has " +
                                std::to_string(grid.n + 1) + " faces");
  }
}

}  // namespace

Grid::Grid(int cell_count) : n(cell_count), dx(1.0 / cell_count) {
  if (cell_count < 4) {
    throw std::invalid_argument("grid needs at least 4 cells, got " +
                                std::to_string(cell_count));
  }
}

CellField sample_cells(const std::function<double(double)>& f, const Grid& grid) {
  CellField out(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) out[i] = f(grid.cell_center(i));
  return out;
}

FaceField sample_faces(const std::function<double(double)>& f, const Grid& grid) {
  FaceField out(static_cast<std::size_t>(grid.n) + 1);
  for (int j = 0; j <= grid.n; ++j) out[j] = f(grid.face_position(j));
  return out;
}

double integrate(const CellField& field, const Grid& grid) {
  require_cell_size(field, grid, "integrate");
  double sum = 0.0;
  for (double x : field.v) sum += x;
  return grid.dx * sum;
}

double lp_norm(const std::vector<double>& values, double p, double dx) {
  if (!(p >= 1.0)) {
    throw std::domain_error("lp_norm: p must be >= 1, got " + std::to_string(p));
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : values) m = std::max(m, std::fabs(x));
    return m;
  }
  double sum = 0.0;
  for (double x : values) sum += std::pow(std::fabs(x), p);
  return std::pow(dx * sum, 1.0 / p);
}

double lp_norm(const CellField& field, double p, const Grid& grid) {
  require_cell_size(field, grid, "lp_norm");
  return lp_norm(field.v, p, grid.dx);
}

double lp_norm(const FaceField& field, double p, const Grid& grid) {
  require_face_size(field, grid, "lp_norm");
  return lp_norm(field.v, p, grid.dx);
}

CellField face_gradient(const FaceField& u, const Grid& grid) {
  require_face_size(u, grid, "face_gradient");
  CellField out(static_cast<std::size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) out[i] = (u[i + 1] - u[i]) / grid.dx;
  return out;
}

std::vector<double> cell_gradient(const CellField& rho, const Grid& grid) {
  require_cell_size(rho, grid, "cell_gradient");
  std::vector<double> out(static_cast<std::size_t>(grid.n) - 1);
  for (int j = 1; j < grid.n; ++j) out[j - 1] = (rho[j] - rho[j - 1]) / grid.dx;
  return out;
}

double w1p_norm(const FaceField& u, double p, const Grid& grid) {
  return lp_norm(u, p, grid) + lp_norm(face_gradient(u, grid), p, grid);
}

}  // namespace ns1d
