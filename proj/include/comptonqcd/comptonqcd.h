/*
 * C interface to the comptonqcd library.
 *
 * Every function returns a cqcd_status. On failure a human-readable message
 * for the calling thread is available from cqcd_last_error(). Objects are
 * opaque handles created by *_create / constructor functions and released
 * with the matching *_destroy function; destroying NULL is a no-op.
 *
 * Functions that produce text follow one convention: pass a buffer and its
 * capacity; *needed receives the size including the terminating NUL. If the
 * buffer is NULL or too small nothing is written and
 * CQCD_ERR_BUFFER_TOO_SMALL is returned.
 */
#ifndef COMPTONQCD_H
#define COMPTONQCD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COMPTONQCD_BUILDING)
#    define CQCD_API __declspec(dllexport)
#  else
#    define CQCD_API __declspec(dllimport)
#  endif
#else
#  define CQCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cqcd_status {
    CQCD_OK = 0,
    CQCD_ERR_INVALID_QUANTITY = 1,
    CQCD_ERR_DIMENSION = 2,
    CQCD_ERR_DIV_BY_ZERO = 3,
    CQCD_ERR_INVALID_MASS = 4,
    CQCD_ERR_REGIME = 5,
    CQCD_ERR_INVALID_DIMENSION = 6,
    CQCD_ERR_DOMAIN = 7,
    CQCD_ERR_SINGULAR_CONFIGURATION = 8,
    CQCD_ERR_NO_BOUND_STATE = 9,
    CQCD_ERR_GRID_TOO_SMALL = 10,
    CQCD_ERR_INVALID_SOURCE = 11,
    CQCD_ERR_PARSE = 12,
    CQCD_ERR_IO = 13,
    CQCD_ERR_NULL_ARGUMENT = 100,
    CQCD_ERR_BUFFER_TOO_SMALL = 101,
    CQCD_ERR_INTERNAL = 199
} cqcd_status;

typedef enum cqcd_e2_mode {
    CQCD_E2_PAPER = 0,   /* e^2 = 1/137 */
    CQCD_E2_PRECISE = 1, /* e^2 = 1/137.035999 */
    CQCD_E2_UNIT = 2     /* e^2 = 1 */
} cqcd_e2_mode;

typedef enum cqcd_format { CQCD_FORMAT_CSV = 0, CQCD_FORMAT_JSON = 1, CQCD_FORMAT_TABLE = 2 } cqcd_format;

typedef enum cqcd_regime { CQCD_REGIME_ELECTRON = 0, CQCD_REGIME_PION = 1, CQCD_REGIME_QUARK = 2 } cqcd_regime;

typedef enum cqcd_axis { CQCD_AXIS_AXIAL = 0, CQCD_AXIS_TRANSVERSE = 1 } cqcd_axis;

typedef struct cqcd_source cqcd_source;
typedef struct cqcd_configuration cqcd_configuration;
typedef struct cqcd_bound_state cqcd_bound_state;
typedef struct cqcd_table cqcd_table;

/* Plain description of a radial problem; lengths in 1/m_e, masses in m_e. */
typedef struct cqcd_radial_problem {
    double alpha;
    double sigma;
    double reduced_mass;
    int angular_momentum;
    double r_min;
    double r_max;
    int grid_points;
} cqcd_radial_problem;

typedef struct cqcd_confinement {
    double quark_mass;
    double compton_wavelength;
    double reduced_mass;
    double sigma;
    double energy;
    double rms_radius;
    double ratio;
    int nodes;
} cqcd_confinement;

CQCD_API const char* cqcd_status_string(cqcd_status status);
CQCD_API const char* cqcd_last_error(void);
CQCD_API const char* cqcd_version(void);

/* natural units and couplings */
CQCD_API cqcd_status cqcd_parse_e2_mode(const char* text, cqcd_e2_mode* out);
CQCD_API cqcd_status cqcd_fine_structure(cqcd_e2_mode mode, double* out);
CQCD_API cqcd_status cqcd_fine_structure_exact(cqcd_e2_mode mode, int64_t* num, int64_t* den);
CQCD_API cqcd_status cqcd_compton_wavelength(double mass, double* out);

/* charges and the Cornell potential */
CQCD_API cqcd_status cqcd_charge_fraction(int d, int64_t* num, int64_t* den);
/* separation <= 0 selects the default l = 1/m_quark */
CQCD_API cqcd_status cqcd_cornell_from_paper(double m_quark, double separation, double* alpha,
                                             double* sigma);
CQCD_API cqcd_status cqcd_cornell_evaluate(double alpha, double sigma, double r, double* out);
CQCD_API cqcd_status cqcd_paper_confinement_slope(double l, cqcd_e2_mode mode, double* out);

/* mass estimates, all in m_e */
CQCD_API cqcd_status cqcd_effective_mass_from_slope(int64_t k_num, int64_t k_den, cqcd_e2_mode mode,
                                                    double* out);
CQCD_API cqcd_status cqcd_quark_mass(cqcd_e2_mode mode, double* out, int* order_satisfied);
CQCD_API cqcd_status cqcd_pion_mass(cqcd_e2_mode mode, double* single_fermion, double* pion);
CQCD_API cqcd_status cqcd_classify_regime(double scale_over_compton, double delta, cqcd_regime* out);
CQCD_API const char* cqcd_regime_name(cqcd_regime regime);

/* stress-energy sources */
CQCD_API cqcd_status cqcd_source_uniform_ball(double radius, double total_energy, cqcd_source** out);
CQCD_API cqcd_status cqcd_source_default(double mass, cqcd_source** out);
CQCD_API cqcd_status cqcd_source_from_csv(const char* path, double total_energy, cqcd_source** out);
CQCD_API void cqcd_source_destroy(cqcd_source* src);
CQCD_API cqcd_status cqcd_source_support_radius(const cqcd_source* src, double* out);
CQCD_API cqcd_status cqcd_source_total_energy(const cqcd_source* src, double* out);
CQCD_API cqcd_status cqcd_kernel_inverse(const cqcd_source* src, double r, double* out);
CQCD_API cqcd_status cqcd_kernel_linear(const cqcd_source* src, double r, double* out);
CQCD_API cqcd_status cqcd_near_field(const cqcd_source* src, double mass, double r, double* out);
CQCD_API cqcd_status cqcd_far_field(const cqcd_source* src, double mass, int d, double r,
                                    cqcd_e2_mode mode, double* out);

/* quark configurations */
CQCD_API cqcd_status cqcd_configuration_proton(double l, cqcd_configuration** out);
CQCD_API cqcd_status cqcd_configuration_from_json(const char* json, cqcd_configuration** out);
CQCD_API cqcd_status cqcd_configuration_to_json(const cqcd_configuration* cfg, char* buf,
                                                size_t capacity, size_t* needed);
CQCD_API void cqcd_configuration_destroy(cqcd_configuration* cfg);
CQCD_API cqcd_status cqcd_configuration_energy(const cqcd_configuration* cfg, cqcd_e2_mode mode,
                                               double* out);
CQCD_API cqcd_status cqcd_configuration_displaced_energy(const cqcd_configuration* cfg, double disp,
                                                         cqcd_axis axis, cqcd_e2_mode mode,
                                                         double* out);

/* bound states */
CQCD_API cqcd_status cqcd_radial_problem_default(double alpha, double sigma, double reduced_mass,
                                                 int angular_momentum, double length_scale,
                                                 cqcd_radial_problem* out);
CQCD_API cqcd_status cqcd_radial_problem_auto(double alpha, double sigma, double reduced_mass,
                                              int angular_momentum, int level,
                                              cqcd_radial_problem* out);
CQCD_API cqcd_status cqcd_solve_bound_state(const cqcd_radial_problem* problem, int level,
                                            cqcd_bound_state** out);
CQCD_API void cqcd_bound_state_destroy(cqcd_bound_state* state);
CQCD_API cqcd_status cqcd_bound_state_energy(const cqcd_bound_state* state, double* out);
CQCD_API cqcd_status cqcd_bound_state_nodes(const cqcd_bound_state* state, int* out);
CQCD_API cqcd_status cqcd_bound_state_rms_radius(const cqcd_bound_state* state, double* out);
CQCD_API cqcd_status cqcd_bound_state_size(const cqcd_bound_state* state, size_t* out);
/* Copies up to `count` samples of r and u (either pointer may be NULL). */
CQCD_API cqcd_status cqcd_bound_state_samples(const cqcd_bound_state* state, double* r, double* u,
                                              size_t count);
CQCD_API cqcd_status cqcd_virial_residual(const cqcd_bound_state* state,
                                          const cqcd_radial_problem* problem, double* out);
/* {"n", "E", "nodes", "rms_radius", "grid_points", "tolerances"} */
CQCD_API cqcd_status cqcd_bound_state_sidecar_json(const cqcd_bound_state* state, char* buf,
                                                   size_t capacity, size_t* needed);
/* quark_mass <= 0 uses the derived estimate */
CQCD_API cqcd_status cqcd_confinement_analysis(cqcd_e2_mode mode, double quark_mass,
                                               int sigma_override, double sigma,
                                               cqcd_confinement* out);

/* tables: build row by row, render as CSV, JSON or aligned text */
CQCD_API cqcd_status cqcd_table_create(const char* title, const char* const* columns,
                                       size_t column_count, cqcd_table** out);
CQCD_API void cqcd_table_destroy(cqcd_table* table);
CQCD_API cqcd_status cqcd_table_begin_row(cqcd_table* table);
CQCD_API cqcd_status cqcd_table_push_real(cqcd_table* table, double value);
CQCD_API cqcd_status cqcd_table_push_integer(cqcd_table* table, int64_t value);
CQCD_API cqcd_status cqcd_table_push_rational(cqcd_table* table, int64_t num, int64_t den);
CQCD_API cqcd_status cqcd_table_push_text(cqcd_table* table, const char* text);
CQCD_API cqcd_status cqcd_table_push_empty(cqcd_table* table);
CQCD_API cqcd_status cqcd_table_meta_real(cqcd_table* table, const char* key, double value);
CQCD_API cqcd_status cqcd_table_meta_integer(cqcd_table* table, const char* key, int64_t value);
CQCD_API cqcd_status cqcd_table_meta_text(cqcd_table* table, const char* key, const char* value);
CQCD_API cqcd_status cqcd_table_render(const cqcd_table* table, cqcd_format format, char* buf,
                                       size_t capacity, size_t* needed);

CQCD_API cqcd_status cqcd_derive_table(cqcd_e2_mode mode, double delta, cqcd_table** out);
CQCD_API cqcd_status cqcd_linearize_table(double l, cqcd_e2_mode mode, cqcd_table** out);
/* Columns r,u */
CQCD_API cqcd_status cqcd_bound_state_table(const cqcd_bound_state* state, cqcd_table** out);

#ifdef __cplusplus
}
#endif

#endif /* COMPTONQCD_H */
