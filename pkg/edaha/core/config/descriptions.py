# GeneralConfig
GENERAL_ICONS = "Display emoji icons in verification output."
GENERAL_PYGMENT_STYLE = "The pygment style used when printing the config file."

# NumericConfig
NUMERIC_PRECISION = "Working precision of numeric certification, in decimal digits."
NUMERIC_MAX_PRODUCT_INDEX = (
    "Maximum number of series terms used when evaluating a q-Pochhammer symbol."
)
NUMERIC_TOL = (
    "Absolute tolerance below which a sampled value counts as zero. "
    "Must be at least 10^(3 - precision)."
)
NUMERIC_SAMPLES = "Number of random sample points used by the numeric zero test."
NUMERIC_SEED = "Seed of the sample point generator. Same seed, same report."
NUMERIC_EPSILON = (
    "Sample points keep every |p^a s^b| outside the annulus 1 - epsilon < |z| < 1/(1 - epsilon)."
)

# VerifyConfig
VERIFY_MAX_WORD_LEN = "Longest free group word used by shift and invariance checks."
VERIFY_MAX_TOTAL_LEN = (
    "Relator word tuples up to this total length are checked exhaustively."
)
VERIFY_RANDOM_TUPLES = "Number of extra seeded random relator instances."
VERIFY_RANDOM_MAX_TOTAL_LEN = "Total length bound for the random relator instances."
VERIFY_RESIDUAL_TOL = (
    "Residual accepted when a matrix identity is decided by the numeric tier."
)
VERIFY_WORKERS = "Number of worker threads used to run independent checks."

# LaumonConfig
LAUMON_MAX_BOXES = "Largest total number of boxes in the partition-tuple sum."
LAUMON_B_MAX = "Truncation of the infinite product inside each Nekrasov factor."
LAUMON_P_ORDER = "Order in p kept by series mode."
LAUMON_S_ORDER = "Order in s kept by series mode."
LAUMON_TOL = "Tolerance of numeric Laumon comparisons and stability monitors."
LAUMON_PRECISION = "Working precision of numeric Laumon sums, in decimal digits."
LAUMON_P = "Default value of the p parameter in numeric mode."
LAUMON_S = "Default value of the s parameter in numeric mode."
LAUMON_Q = "Value of Q in numeric mode; |Q| > 1 keeps the p-free box weights below one."

# AppConfig
APP_GENERAL = "General output settings."
APP_NUMERIC = "Numeric certification policy."
APP_VERIFY = "Sizes of the exhaustive and random verification suites."
APP_LAUMON = "Truncations of the affine Laumon character."
