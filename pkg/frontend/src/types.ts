// Wire types mirroring the compute service's JSON schemas.

export type Pair = [number, number];

export interface CurveCoeff {
  k: number;
  re: number;
  im: number;
}

export interface CurveJson {
  K: number;
  coeffs: CurveCoeff[];
}

export interface ConfigJson {
  alpha: Pair[];
  beta: Pair[];
}

export interface ValidationReport {
  immersed: boolean;
  min_speed: number;
  simple: boolean;
  first_self_intersection: Pair | null;
  turning_number: number;
}

export interface InscriptionJson {
  coeffs: Pair[];
  t_params: number[];
  s_params: number[];
  residual: number;
  constant: boolean;
  degenerate: boolean;
  image_points: Pair[];
  circle_image: Pair[];
}

export interface SolveReportJson {
  inscriptions: InscriptionJson[];
  n_starts: number;
  n_converged: number;
  n_constant_discarded: number;
  truncated: boolean;
  wall_time_s?: number;
}

export interface SolveOptionsJson {
  n_starts?: number;
  seed?: number;
  deadline_s?: number;
}

export interface SolveRequest {
  curve: CurveJson;
  config: ConfigJson;
  degree: number;
  opts: SolveOptionsJson;
}

export interface FitResponse {
  curve: CurveJson;
  report: ValidationReport;
}

export interface ApiError {
  code: string;
  message: string;
  detail?: unknown;
}

export interface ReductionJson {
  reducible: boolean;
  center?: Pair;
  images?: Pair[];
}

/** Core report content that must replay bit-for-bit through the CLI. */
export function canonicalReport(report: SolveReportJson): unknown {
  return {
    inscriptions: report.inscriptions.map((i) => ({
      coeffs: i.coeffs,
      t_params: i.t_params,
      s_params: i.s_params,
      residual: i.residual,
      constant: i.constant,
      degenerate: i.degenerate,
    })),
    n_starts: report.n_starts,
    n_converged: report.n_converged,
    n_constant_discarded: report.n_constant_discarded,
    truncated: report.truncated,
  };
}
