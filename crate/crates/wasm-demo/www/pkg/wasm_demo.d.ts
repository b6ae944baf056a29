/* tslint:disable */
/* eslint-disable */

/**
 * Abacus of a partition before and after inserting the runner for `edge`.
 */
export function abacus_display(e: number, charge: bigint, partition: string, edge: number): string;

/**
 * Signature of the idempotent `1_lam`, e.g. `s0 g0 | r0 |`.
 */
export function idempotent_signature(e: number, charge: string, partition: string): string;

/**
 * `lambda+` for the edge `edge -> edge+1`, with its new charge.
 */
export function subdivided_partition(e: number, charge: string, partition: string, edge: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly abacus_display: (a: number, b: bigint, c: number, d: number, e: number) => [number, number, number, number];
    readonly idempotent_signature: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly subdivided_partition: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
