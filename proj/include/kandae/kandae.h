#ifndef KANDAE_H
#define KANDAE_H

/* C interface to the DAE benchmark library.
 *
 * Every entry point returns KANDAE_OK or an error code; kandae_last_error()
 * describes the most recent failure on the calling thread.  Error codes:
 *   KANDAE_EINVAL  argument or configuration rejected up front
 *   KANDAE_EIO     the configuration file could not be opened
 *   KANDAE_EFAIL   the operation itself failed (training, integration,
 *                  reading run directories, writing artifacts)
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  KANDAE_OK = 0,
  KANDAE_EINVAL = 1,
  KANDAE_EIO = 2,
  KANDAE_EFAIL = 3
};

typedef struct kandae_run kandae_run;

const char* kandae_version(void);

/* Message of the last failed call on this thread; empty string if none. */
const char* kandae_last_error(void);

/* Run one experiment: load the key=value config at config_path, train, and
 * write the artifact set into out_dir.  seed_override, when non-NULL,
 * replaces the config's seed.  With dry_run nonzero the config is only
 * validated and resolved; nothing is trained or written.
 *
 * On success *out_run (if out_run is non-NULL) receives a handle that must
 * be released with kandae_run_free.  A dry run yields a handle carrying the
 * resolved configuration and no results. */
int kandae_solve(const char* config_path, const char* out_dir, int dry_run,
                 const uint64_t* seed_override, kandae_run** out_run);

void kandae_run_free(kandae_run* run);

/* Resolved configuration text of the run (valid while the handle lives). */
const char* kandae_run_config(const kandae_run* run);

/* Number of reported variables; 0 for a dry run. */
size_t kandae_run_variable_count(const kandae_run* run);

const char* kandae_run_variable(const kandae_run* run, size_t index);

/* Relative error of one variable on the evaluation grid. */
int kandae_run_re(const kandae_run* run, size_t index, double* out);

/* Final training loss. */
int kandae_run_final_loss(const kandae_run* run, double* out);

/* Integrate the named system's index-1 ODE with the reference solver and
 * write out_dir/drift_table.csv (columns t, c3_residual, c2_residual).
 * Only "pendulum" is supported. */
int kandae_driftoff(const char* system, double horizon, double rtol,
                    const char* out_dir);

/* Collect re.csv of each finished run directory into one comparison table
 * at out_path, rows (model, index form), one column per variable. */
int kandae_compare(const char* const* run_dirs, size_t count,
                   const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* KANDAE_H */
