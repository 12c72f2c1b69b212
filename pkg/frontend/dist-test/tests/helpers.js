// Spawns the Python API for the duration of a test file.
import { spawn } from "node:child_process";
export async function startApi() {
    const port = 8900 + Math.floor(Math.random() * 500);
    const proc = spawn("python3", ["-m", "yoshimura.cli", "serve", "--port", String(port)], { stdio: "ignore" });
    const baseUrl = `http://127.0.0.1:${port}/v1`;
    const deadline = Date.now() + 15000;
    for (;;) {
        try {
            const resp = await fetch(`${baseUrl}/design`);
            if (resp.ok)
                break;
        }
        catch {
            // not up yet
        }
        if (Date.now() > deadline) {
            proc.kill();
            throw new Error("API did not come up within 15s");
        }
        await new Promise((r) => setTimeout(r, 150));
    }
    return { baseUrl, stop: () => proc.kill() };
}
