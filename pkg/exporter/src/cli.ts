/**
 * Exporter entry point.
 *
 *   node dist/cli.js --arch mnist-mlp6 --out bundles/mnist-mlp6 --seed 1234
 *   node dist/cli.js --verify bundles/mnist-mlp6
 */

import { join } from "node:path";
import { exit } from "node:process";

import { trainAndExport } from "./train.js";
import { verifyRoundtrip } from "./verify.js";

function parseArgs(argv: string[]): Map<string, string> {
  const out = new Map<string, string>();
  for (let i = 0; i < argv.length; i++) {
    if (!argv[i].startsWith("--")) throw new Error(`unexpected argument ${argv[i]}`);
    const key = argv[i].slice(2);
    const val = argv[i + 1];
    if (val === undefined) throw new Error(`missing value for --${key}`);
    out.set(key, val);
    i++;
  }
  return out;
}

function main(): number {
  const args = parseArgs(process.argv.slice(2));
  if (args.has("verify")) {
    const dir = args.get("verify")!;
    const report = verifyRoundtrip(join(dir, "model"), join(dir, "data", "test"));
    console.log(`accuracy ${(100 * report.accuracy).toFixed(2)}% `
                + `(manifest ${(100 * report.manifestAccuracy).toFixed(2)}%)`
                + (report.predictionMismatches !== undefined
                   ? `, prediction mismatches: ${report.predictionMismatches}` : ""));
    console.log(report.ok ? "roundtrip OK" : "roundtrip FAILED");
    return report.ok ? 0 : 1;
  }
  const arch = args.get("arch");
  const out = args.get("out");
  if (!arch || !out) {
    console.error("usage: --arch mnist-mlp6|toy-2layer --out DIR [--seed N] "
                  + "[--epochs N] [--train-export N] [--test-export N] | --verify DIR");
    return 1;
  }
  const opts = {
    outDir: out,
    seed: args.has("seed") ? Number(args.get("seed")) : 1234,
    epochs: args.has("epochs") ? Number(args.get("epochs")) : undefined,
    trainExport: args.has("train-export") ? Number(args.get("train-export")) : undefined,
    testExport: args.has("test-export") ? Number(args.get("test-export")) : undefined,
  };
  trainAndExport(arch, opts, (msg) => console.log(msg));
  const report = verifyRoundtrip(join(out, "model"), join(out, "data", "test"));
  console.log(`roundtrip: accuracy ${(100 * report.accuracy).toFixed(2)}% `
              + `vs manifest ${(100 * report.manifestAccuracy).toFixed(2)}%, `
              + `mismatches ${report.predictionMismatches}`);
  if (!report.ok) {
    console.error("roundtrip FAILED");
    return 1;
  }
  console.log("roundtrip OK");
  return 0;
}

try {
  exit(main());
} catch (err) {
  console.error(`ERROR: ${(err as Error).message}`);
  exit(2);
}
