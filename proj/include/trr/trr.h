/* C interface to the teach-repeat-replan planning library.
 *
 * Every object is an opaque handle released with its *_free function (NULL is
 * accepted).  Functions return a trr_status; on failure trr_last_error()
 * describes the problem.  The message is per thread and stays valid until the
 * next failing call on that thread. */
#ifndef TRR_TRR_H
#define TRR_TRR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TRR_API __declspec(dllexport)
#else
#define TRR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trr_status {
  TRR_OK = 0,
  TRR_INVALID_INPUT = 1, /* bad arguments, files or formats */
  TRR_INFEASIBLE = 2,    /* the planner found no feasible result */
  TRR_INTERNAL = 3       /* library defect or system failure */
} trr_status;

typedef struct trr_map trr_map;
typedef struct trr_path trr_path;
typedef struct trr_corridor trr_corridor;
typedef struct trr_trajectory trr_trajectory;
typedef struct trr_runlog trr_runlog;
typedef struct trr_server trr_server;

TRR_API const char* trr_version(void);
TRR_API const char* trr_last_error(void);
TRR_API const char* trr_status_name(trr_status status);

/* Scenario families understood by the generators: "racing", "injection",
 * "empty". */

/* Maps */
TRR_API trr_status trr_map_generate(const char* family, uint64_t seed, trr_map** out);
TRR_API trr_status trr_map_load(const char* file, trr_map** out);
TRR_API trr_status trr_map_save(const trr_map* map, const char* file);
TRR_API trr_status trr_map_info(const trr_map* map, int dims[3], double* resolution, double origin[3],
                                size_t* occupied);
TRR_API void trr_map_free(trr_map* map);

/* Teach paths */
TRR_API trr_status trr_path_generate(const char* family, uint64_t seed, trr_path** out);
TRR_API trr_status trr_path_load(const char* file, trr_path** out);
TRR_API trr_status trr_path_save(const trr_path* path, const char* file);
TRR_API size_t trr_path_size(const trr_path* path);
TRR_API trr_status trr_path_point(const trr_path* path, size_t i, double* t, double p[3]);
TRR_API void trr_path_free(trr_path* path);

/* Corridors */
typedef struct trr_corridor_options {
  int clip;            /* nonzero cuts occupied voxels out of each hull */
  int max_members;     /* 0 keeps the default cluster cap */
  double step_fraction;
} trr_corridor_options;

TRR_API void trr_corridor_options_default(trr_corridor_options* options);
TRR_API trr_status trr_corridor_build(const trr_map* map, const trr_path* path, const trr_corridor_options* options,
                                      trr_corridor** out);
TRR_API trr_status trr_corridor_load(const char* file, trr_corridor** out);
TRR_API trr_status trr_corridor_save(const trr_corridor* corridor, const char* file);
TRR_API size_t trr_corridor_size(const trr_corridor* corridor);
/* Largest halfspace violation of |p| over polyhedron |i|; <= 0 means inside. */
TRR_API trr_status trr_corridor_violation(const trr_corridor* corridor, size_t i, const double p[3], double* violation);
TRR_API void trr_corridor_free(trr_corridor* corridor);

/* Global planning */
typedef struct trr_plan_options {
  double v_max;
  double a_max;
  double delta_alpha; /* <= 0 picks 3 * a_max */
  double rho;
  double time_weight;
  int max_rounds;
} trr_plan_options;

TRR_API void trr_plan_options_default(trr_plan_options* options);
TRR_API trr_status trr_plan(const trr_corridor* corridor, const trr_plan_options* options, trr_trajectory** out);
TRR_API trr_status trr_trajectory_load(const char* file, trr_trajectory** out);
TRR_API trr_status trr_trajectory_save(const trr_trajectory* trajectory, const char* file);
/* rounds is 0 for a loaded trajectory. */
TRR_API trr_status trr_trajectory_info(const trr_trajectory* trajectory, size_t* pieces, double* duration, int* rounds);
TRR_API trr_status trr_trajectory_eval(const trr_trajectory* trajectory, double t, int order, double out[3]);
TRR_API void trr_trajectory_free(trr_trajectory* trajectory);

/* Simulation */
typedef struct trr_run_summary {
  int completed;
  int emergency_stop;
  int replans;
  int replans_succeeded;
  size_t ticks;
  size_t corridor_size;
  int descent_rounds;
  double planned_duration;
  double min_clearance;
  double max_tracking_error;
} trr_run_summary;

/* Seeded scenario from a family; replanning = 0 disables the local planner. */
TRR_API trr_status trr_run_scenario(const char* family, uint64_t seed, int replanning, trr_runlog** out);
/* Teach, plan and fly a path through a static map.  The map is the whole
 * truth, so the local planner is only useful for checking; replanning = 0
 * flies the global trajectory as planned. */
TRR_API trr_status trr_run_files(const trr_map* map, const trr_path* path, const trr_plan_options* options,
                                 int replanning, trr_runlog** out);
TRR_API trr_status trr_runlog_save(const trr_runlog* log, const char* file);
TRR_API trr_status trr_runlog_summary(const trr_runlog* log, trr_run_summary* out);
TRR_API void trr_runlog_free(trr_runlog* log);

/* Teach service */
TRR_API trr_status trr_server_start(const trr_map* map, int port, const trr_plan_options* options, trr_server** out);
TRR_API int trr_server_port(const trr_server* server);
/* Stops accepting, closes every session and releases the handle. */
TRR_API void trr_server_stop(trr_server* server);

#ifdef __cplusplus
}
#endif

#endif
