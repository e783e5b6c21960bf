/** Training recipes and bundle export for the two reference architectures. */

import { join } from "node:path";

import { loadMnist, makeBlobs, Split } from "./data.js";
import { Mlp, TrainConfig } from "./mlp.js";
import { writeDataset, writeModel, writeManifest } from "./nnwf.js";
import { predictionsFromFiles } from "./verify.js";

export interface ExportOptions {
  outDir: string;
  seed: number;
  epochs?: number;
  trainExport?: number;   // training samples copied into the bundle
  testExport?: number;
}

export interface ExportResult {
  name: string;
  trainAccuracy: number;
  testAccuracy: number;
  modelDir: string;
  trainDir: string;
  testDir: string;
}

interface Recipe {
  sizes: number[];
  cfg: TrainConfig;
  accuracyFloor: number;
  normalization: string;
  data: () => { train: Split; test: Split };
  trainExportDefault: number;
}

function buildRecipe(arch: string, seed: number, epochs?: number): Recipe {
  if (arch === "mnist-mlp6") {
    return {
      sizes: [784, 512, 256, 128, 64, 32, 10],
      cfg: { epochs: epochs ?? 3, batchSize: 64, learningRate: 0.35, lrDecay: 0.5 },
      accuracyFloor: 0.95,
      normalization: "pixel/255",
      data: loadMnist,
      trainExportDefault: 2560,
    };
  }
  if (arch === "toy-2layer") {
    return {
      sizes: [16, 8, 2],
      cfg: { epochs: epochs ?? 40, batchSize: 32, learningRate: 0.1, lrDecay: 0.95 },
      accuracyFloor: 0.99,
      normalization: "none",
      data: () => {
        const all = makeBlobs(2560, 16, seed + 101);
        const dim = all.dim;
        const nTrain = 2048;
        return {
          train: { x: all.x.slice(0, nTrain * dim), y: all.y.slice(0, nTrain),
                   count: nTrain, dim },
          test: { x: all.x.slice(nTrain * dim), y: all.y.slice(nTrain),
                  count: all.count - nTrain, dim },
        };
      },
      trainExportDefault: 2048,
    };
  }
  throw new Error(`unknown architecture '${arch}'`);
}

export function trainAndExport(arch: string, opts: ExportOptions,
                               log: (msg: string) => void = () => {}): ExportResult {
  const recipe = buildRecipe(arch, opts.seed, opts.epochs);
  const { train, test } = recipe.data();
  log(`${arch}: ${train.count} train / ${test.count} test samples`);

  const model = new Mlp(recipe.sizes, opts.seed);
  model.train(train.x, train.y, train.count, recipe.cfg, opts.seed, log);

  const trainAccuracy = model.accuracy(train.x, train.y, train.count);
  const testAccuracy = model.accuracy(test.x, test.y, test.count);
  log(`${arch}: train accuracy ${(100 * trainAccuracy).toFixed(2)}% / `
      + `test accuracy ${(100 * testAccuracy).toFixed(2)}%`);
  if (testAccuracy < recipe.accuracyFloor) {
    throw new Error(`${arch}: test accuracy ${testAccuracy} below floor `
                    + `${recipe.accuracyFloor} after ${recipe.cfg.epochs} epochs`);
  }

  const modelDir = join(opts.outDir, "model");
  const trainDir = join(opts.outDir, "data", "train");
  const testDir = join(opts.outDir, "data", "test");
  const manifest = writeModel(modelDir, arch, model, {
    seed: opts.seed,
    epochs: recipe.cfg.epochs,
    batch_size: recipe.cfg.batchSize,
    learning_rate: recipe.cfg.learningRate,
    lr_decay: recipe.cfg.lrDecay,
    train_accuracy: trainAccuracy,
    test_accuracy: testAccuracy,
  });
  writeDataset(trainDir, train, recipe.normalization,
               opts.trainExport ?? recipe.trainExportDefault);
  const nTest = writeDataset(testDir, test, recipe.normalization, opts.testExport);

  // record predictions from the *written* float32 weights so the loader on
  // the other side of the file format can check argmax equivalence
  const preds = predictionsFromFiles(modelDir, test.x, nTest, test.dim);
  let correct = 0;
  for (let i = 0; i < nTest; i++) {
    if (preds[i] === test.y[i]) correct++;
  }
  manifest.recorded_predictions = {
    split: "test",
    accuracy: correct / nTest,
    argmax: Array.from(preds),
  };
  writeManifest(modelDir, manifest);
  log(`${arch}: exported to ${opts.outDir} `
      + `(reloaded-weight accuracy ${(100 * correct / nTest).toFixed(2)}%)`);
  return { name: arch, trainAccuracy, testAccuracy, modelDir, trainDir, testDir };
}
