#!/usr/bin/env node
import { runCli } from "./cli.js";

process.exit(runCli("fig2", process.argv.slice(2)));
