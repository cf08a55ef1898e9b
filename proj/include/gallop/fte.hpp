#pragma once

#include "gallop/camera.hpp"
#include "gallop/observation.hpp"
#include "gallop/skeleton.hpp"
#include "gallop/trajectory.hpp"
#include "gallop/triangulate.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <vector>

namespace gallop {

/// Thresholds of the redescending measurement cost, in units of sigma_meas.
struct RobustCostParams {
  double a = 3.0;
  double b = 10.0;
  double c = 20.0;
  double sigma_meas = 5.0;  ///< px

  void validate() const;
};

/// Redescending cost: quadratic below a, linear on [a, b), a smooth
/// saturating segment on [b, c) and constant from c on. C and C' are
/// continuous everywhere and C' vanishes from c outwards.
double robust_cost(double e, const RobustCostParams& p);
double robust_cost_derivative(double e, const RobustCostParams& p);
/// Value of the flat tail, C(e) for |e| >= c.
double robust_cost_saturation(const RobustCostParams& p);

struct FteConfig {
  RobustCostParams cost;
  Pose sigma_model = default_sigma_model();  ///< acceleration disturbance std per parameter
  double likelihood_threshold = 0.5;
  int max_iterations = 500;
  double gradient_tolerance = 1e-6;  ///< projected-gradient infinity norm
  double initial_damping = 1e-3;
  int window_threshold = 500;  ///< longer runs are solved in windows
  int window_size = 200;
  int window_overlap = 20;

  static Pose default_sigma_model();
  void validate() const;
};

/// Trajectory variables. x_dot and x_ddot follow the implicit Euler relations
///   x_k = x_{k-1} + dt x_dot_k,  x_dot_k = x_dot_{k-1} + dt x_ddot_k,
///   x_ddot_k = x_ddot_{k-1} + w_k            (k >= 1, 0-based frames)
/// so only x, x_dot_0 and x_ddot_0 are free.
struct FteTrajectory {
  std::vector<Pose> x, x_dot, x_ddot;
  std::vector<Pose> w;  ///< w[0] is zero (no disturbance before the first frame)
};

struct FteObjective {
  double cost = 0;
  double measurement_cost = 0;
  double model_cost = 0;
  Eigen::VectorXd gradient;
};

/// The reduced, bound-constrained problem. Variable vector layout:
/// [x_dot_0 (24), x_ddot_0 (24), x_0 (24), ..., x_{N-1} (24)].
class FteProblem {
public:
  FteProblem(const ObservationSet& obs, const CameraRig& rig, const SkeletonModel& model,
             const FteConfig& cfg);

  int num_frames() const { return num_frames_; }
  int num_variables() const { return kNumPoseParams * (num_frames_ + 2); }
  double dt() const { return dt_; }

  Eigen::VectorXd pack(const std::vector<Pose>& x, const Pose& x_dot0, const Pose& x_ddot0) const;
  FteTrajectory expand(const Eigen::VectorXd& z) const;

  FteObjective evaluate(const Eigen::VectorXd& z, bool with_gradient = true) const;

  /// Gauss-Newton normal matrix (robust terms via IRLS weights) and gradient.
  void normal_equations(const Eigen::VectorXd& z, Eigen::SparseMatrix<double>& hessian,
                        Eigen::VectorXd& gradient, double& cost) const;

  /// Measurement residuals v = y - h(f(x)) for one frame, per masked channel
  /// (camera, marker, du, dv). Channels predicted behind a camera are omitted.
  struct ChannelResidual {
    int camera;
    int marker;
    Vec2 v;
  };
  std::vector<ChannelResidual> residuals(const Pose& x, int frame) const;

  Eigen::VectorXd lower_bounds() const;
  Eigen::VectorXd upper_bounds() const;
  Eigen::VectorXd project(const Eigen::VectorXd& z) const;
  /// z - P(z - g): zero exactly at a KKT point of the bound-constrained problem.
  Eigen::VectorXd projected_gradient(const Eigen::VectorXd& z, const Eigen::VectorXd& g) const;

private:
  struct Channel {
    int camera;
    int marker;
    Vec2 y;
  };

  void build_model_operator();

  const CameraRig& rig_;
  const SkeletonModel& model_;
  FteConfig cfg_;
  int num_frames_;
  double dt_;
  std::vector<std::vector<Channel>> channels_;  // per frame, masked
  Eigen::SparseMatrix<double> model_op_;        // z -> w / sigma_model for frames 1..N-1
};

/// Per-frame root pose from triangulation, other parameters zero; frames
/// without head markers reuse the nearest earlier (or later) estimate.
TrajectoryEstimate fte_initialization(const ObservationSet& obs, const CameraRig& rig,
                                      const SkeletonModel& model,
                                      const TriangulationOptions& tri = {});

TrajectoryEstimate solve_fte(const ObservationSet& obs, const CameraRig& rig,
                             const SkeletonModel& model, const FteConfig& cfg,
                             const TrajectoryEstimate& init);

}  // namespace gallop
