# GeneralConfig
GENERAL_ICONS = True
GENERAL_PYGMENT_STYLE = "github-dark"

# NumericConfig
NUMERIC_PRECISION = 50
NUMERIC_MAX_PRODUCT_INDEX = 200
NUMERIC_TOL = 1e-30
NUMERIC_SAMPLES = 3
NUMERIC_SEED = 20240601
NUMERIC_EPSILON = 0.5

# VerifyConfig
VERIFY_MAX_WORD_LEN = 3
VERIFY_MAX_TOTAL_LEN = 2
VERIFY_RANDOM_TUPLES = 25
VERIFY_RANDOM_MAX_TOTAL_LEN = 4
VERIFY_RESIDUAL_TOL = 1e-20
VERIFY_WORKERS = 4

# LaumonConfig
LAUMON_MAX_BOXES = 6
LAUMON_B_MAX = 40
LAUMON_P_ORDER = 2
LAUMON_S_ORDER = 4
LAUMON_TOL = 1e-8
LAUMON_PRECISION = 30
LAUMON_P = 0.1
LAUMON_S = 0.15
LAUMON_Q = 1.5
